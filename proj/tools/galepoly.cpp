// galepoly: build, verify and export Gale-diagram constructions of illuminated polytopes.
//
// Exit codes: 0 verified/built, 1 a check was refuted (the failing certificate is
// printed), 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "galepoly/errors.hpp"
#include "galepoly/gale.hpp"
#include "galepoly/json_io.hpp"
#include "galepoly/mani.hpp"
#include "galepoly/polytope.hpp"
#include "galepoly/spanning.hpp"
#include "galepoly/svg.hpp"

namespace {

using namespace galepoly;

constexpr int kVerified = 0;
constexpr int kRefuted = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

json readJsonFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open \"" + path + "\"");
    try
    {
        return json::parse(in);
    }
    catch (const json::parse_error& e)
    {
        throw UsageError("\"" + path + "\" is not valid JSON: " + e.what());
    }
}

void writeText(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write \"" + path + "\"");
    out << text;
}

void emit(const json& j)
{
    std::cout << j.dump(2) << "\n";
}

json checkEntry(const std::string& name, bool passed, const json& certificate)
{
    return {{"check", name}, {"passed", passed}, {"digest", digest(certificate)}, {"certificate", certificate}};
}

// ---------------------------------------------------------------- build

struct BuildArgs
{
    int dim = 0;
    std::optional<int> ell;
    std::optional<int> p;
    std::string mode = "full";
    std::string out;
    bool geometric = false;
};

int runBuild(const BuildArgs& args, const ExecOptions& exec)
{
    if (args.dim < 6)
        throw UsageError("--dim must be at least 6 (nonsimplicial Mani polytopes need d >= 6), got " +
                         std::to_string(args.dim));
    ManiOptions options;
    options.ell = args.ell;
    options.p = args.p;
    options.mode = args.mode == "certificate" ? BuildMode::Certificate : BuildMode::Full;
    options.geometricCrossCheck = args.geometric;
    options.exec = exec;

    ManiConstruction c;
    try
    {
        c = constructNonsimplicialMani(args.dim, options);
    }
    catch (const CertificateFailure& failure)
    {
        emit({{"schemaVersion", kSchemaVersion},
              {"verdict", "refuted"},
              {"failedCheck", failure.check()},
              {"certificate", json::parse(failure.detail(), nullptr, false)}});
        return kRefuted;
    }
    catch (const BadParameters& e)
    {
        throw UsageError(e.what());
    }

    const json report = reportJson(c);
    if (!args.out.empty())
    {
        json document = c.p ? toJson(*c.p) : toJson(*c.realizedP);
        document["build"] = {{"plan", toJson(c.plan)}, {"report", report}};
        if (c.q)
            document["build"]["q"] = toJson(*c.q);
        writeText(args.out, document.dump(1) + "\n");
    }
    json summary = report;
    summary["verdict"] = "verified";
    if (!args.out.empty())
        summary["reportPath"] = args.out;
    emit(summary);
    return kVerified;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs
{
    std::string input;
    std::vector<std::string> checks;
    std::size_t gammaCap = 14;
};

json kSpanningJson(const VectorConfiguration& config, const KSpanningVerdict& v)
{
    json deleted = json::array();
    for (auto i : v.deleted)
        deleted.push_back(config.label(i));
    json out = {{"holds", v.holds}, {"deleted", deleted}};
    if (v.certificate)
        out["certificate"] = toJson(*v.certificate);
    return out;
}

int runVerify(const VerifyArgs& args, const ExecOptions& exec)
{
    const json input = readJsonFile(args.input);
    DocumentKind kind;
    try
    {
        kind = detectDocumentKind(input);
    }
    catch (const ParseError& e)
    {
        throw UsageError(e.what());
    }
    if (args.checks.empty())
        throw UsageError("--checks is empty");

    json results = json::array();
    bool allPassed = true;
    auto add = [&](const std::string& name, bool passed, const json& cert) {
        results.push_back(checkEntry(name, passed, cert));
        allPassed = allPassed && passed;
    };

    if (kind == DocumentKind::Polytope)
    {
        IncidencePolytope polytope = polytopeFromJson(input);
        std::optional<IlluminationReport> illumination;
        for (const auto& check : args.checks)
        {
            if (check == "illuminated" || check == "unneighborly")
            {
                if (!illumination)
                    illumination = illuminationReport(polytope);
                const bool passed = check == "illuminated" ? illumination->isIlluminated : illumination->isUnneighborly;
                add(check, passed, toJson(*illumination, polytope));
            }
            else if (check == "simplicial")
            {
                json nonsimplex = json::array();
                for (const auto& f : polytope.facets())
                {
                    if (f.size() == static_cast<std::size_t>(polytope.dim()))
                        continue;
                    json labels = json::array();
                    for (auto v : f)
                        labels.push_back(polytope.label(v));
                    nonsimplex.push_back(labels);
                }
                add(check, nonsimplex.empty(), {{"facets", polytope.facetCount()}, {"nonsimplexFacets", nonsimplex}});
            }
            else if (check == "matching")
            {
                const MatchingResult m = innerDiagonalMatching(polytope);
                json pairs = json::array();
                for (const auto& pr : m.matching)
                    pairs.push_back({polytope.label(pr.u), polytope.label(pr.v)});
                add(check, m.hasPerfectMatching, {{"hasPerfectMatching", m.hasPerfectMatching}, {"matching", pairs}});
            }
            else if (check == "gamma")
            {
                GammaResult g;
                try
                {
                    g = gamma(polytope, args.gammaCap);
                }
                catch (const TooLargeForBruteForce& e)
                {
                    throw UsageError(std::string(e.what()) + " (raise --gamma-cap)");
                }
                json opposite = json::array();
                for (auto w : g.opposite)
                    opposite.push_back(polytope.label(w));
                add(check, true,
                    {{"gamma", g.value},
                     {"vertex", g.vertex ? json(polytope.label(*g.vertex)) : json(nullptr)},
                     {"opposite", opposite}});
            }
            else
            {
                throw UsageError("check \"" + check + "\" does not apply to a polytope");
            }
        }
    }
    else if (kind == DocumentKind::Configuration)
    {
        const VectorConfiguration config = configurationFromJson(input);
        int k = 1;
        for (const auto& check : args.checks)
            if (check.rfind("kspanning:", 0) == 0)
                k = std::stoi(check.substr(10));
        for (const auto& check : args.checks)
        {
            if (check.rfind("kspanning:", 0) == 0)
            {
                if (k < 1)
                    throw UsageError("kspanning needs k >= 1");
                const auto v = isPositivelyKSpanning(config, k, exec);
                add(check, v.holds, kSpanningJson(config, v));
            }
            else if (check == "minimal")
            {
                const auto v = isMinimalKSpanning(config, k, exec);
                json cert = {{"holds", v.holds}, {"k", k}, {"size", config.size()}};
                if (v.spanningFailure)
                    cert["spanningFailure"] = kSpanningJson(config, *v.spanningFailure);
                if (v.removable)
                    cert["removable"] = config.label(*v.removable);
                json witnesses = json::array();
                for (std::size_t u = 0; u < v.deletionWitnesses.size(); ++u)
                {
                    json deleted = json::array();
                    for (auto i : v.deletionWitnesses[u])
                        deleted.push_back(config.label(i));
                    witnesses.push_back({{"removed", config.label(u)}, {"thenDelete", deleted}});
                }
                cert["witnesses"] = witnesses;
                add(check, v.holds, cert);
            }
            else
            {
                throw UsageError("check \"" + check + "\" does not apply to a vector configuration");
            }
        }
    }
    else
    {
        throw UsageError("verify accepts polytope or vector configuration documents");
    }

    emit({{"schemaVersion", kSchemaVersion},
          {"input", args.input},
          {"verdict", allPassed ? "verified" : "refuted"},
          {"checks", results}});
    return allPassed ? kVerified : kRefuted;
}

// ---------------------------------------------------------------- table

int runTable(int maxDim)
{
    if (maxDim < 1)
        throw UsageError("--max-dim must be at least 1");
    json rows = json::array();
    json firstBelow = nullptr;
    for (int d = 1; d <= maxDim; ++d)
    {
        const FormulaTableRow row = formulas(d);
        json entry = toJson(row);
        entry["nuBelow2d"] = row.nu < 2 * d;
        if (row.nu < 2 * d && firstBelow.is_null())
            firstBelow = d;
        rows.push_back(entry);
    }
    emit({{"schemaVersion", kSchemaVersion}, {"rows", rows}, {"firstDimensionWithNuBelow2d", firstBelow}});
    return kVerified;
}

// ---------------------------------------------------------------- plan / export-svg

int runPlan(int dim, std::optional<int> p, std::optional<int> ell, const std::string& out)
{
    ManiPlan plan;
    try
    {
        plan = buildA(dim, p.value_or(dim == 6 ? 3 : blockParameter(std::max(dim, 1))), ell.value_or(1));
    }
    catch (const BadParameters& e)
    {
        throw UsageError(e.what());
    }
    const json document = toJson(plan);
    if (!out.empty())
        writeText(out, document.dump(1) + "\n");
    emit(document);
    return kVerified;
}

int runExportSvg(const std::string& input, const std::string& out)
{
    json document = readJsonFile(input);
    if (document.contains("build") && document["build"].contains("plan"))
        document = document["build"]["plan"];
    ManiPlan plan;
    try
    {
        plan = planFromJson(document);
    }
    catch (const ParseError& e)
    {
        throw UsageError(e.what());
    }
    std::string svg;
    try
    {
        svg = affineGaleSvg(plan);
    }
    catch (const BadParameters& e)
    {
        throw UsageError(e.what());
    }
    const auto clusters = affineGaleClusters(plan.configuration);
    json summary = json::array();
    for (const auto& c : clusters)
        summary.push_back({{"position", toJson(c.position)}, {"black", c.black.size()}, {"white", c.white.size()}});
    if (!out.empty())
        writeText(out, svg);
    else
        std::cout << svg;
    if (!out.empty())
        emit({{"schemaVersion", kSchemaVersion}, {"svg", out}, {"clusters", summary}});
    return kVerified;
}

// ---------------------------------------------------------------- gale

int runGale(const std::string& action, const std::string& input, const std::string& out, const ExecOptions& exec)
{
    const json document = readJsonFile(input);
    json result;
    if (action == "dual")
    {
        result = toJson(galeDual(pointsFromJson(document)));
    }
    else if (action == "realize")
    {
        result = toJson(realize(configurationFromJson(document), exec));
    }
    else if (action == "facets")
    {
        const VectorConfiguration config = configurationFromJson(document);
        result = toJson(incidenceFromGale(config, exec));
    }
    if (!out.empty())
        writeText(out, result.dump(1) + "\n");
    emit(result);
    return kVerified;
}

// ---------------------------------------------------------------- simplicial / marcus

int runSimplicial(int dim, const std::string& out)
{
    const SimplicialManiResult r = maniSimplicial(dim);
    json stacked = json::array();
    for (const auto& f : r.stackedFacets)
    {
        json labels = json::array();
        for (auto v : f)
            labels.push_back(r.cyclic.label(v));
        stacked.push_back(labels);
    }
    if (!out.empty())
        writeText(out, toJson(r.polytope).dump(1) + "\n");
    emit({{"schemaVersion", kSchemaVersion},
          {"formula", toJson(r.formula)},
          {"f0", r.polytope.vertexCount()},
          {"facets", r.polytope.facetCount()},
          {"stackedFacets", stacked},
          {"illuminated", r.illuminated},
          {"simplicial", r.simplicial},
          {"isManiPolytope", r.isManiPolytope}});
    return r.illuminated && r.simplicial ? kVerified : kRefuted;
}

int runMarcus(int dim, const std::string& out, const ExecOptions& exec)
{
    MarcusReport r;
    try
    {
        r = unneighborlyDualPipeline(dim, exec);
    }
    catch (const CertificateFailure& failure)
    {
        emit({{"schemaVersion", kSchemaVersion},
              {"verdict", "refuted"},
              {"failedCheck", failure.check()},
              {"certificate", json::parse(failure.detail(), nullptr, false)}});
        return kRefuted;
    }
    if (!out.empty())
        writeText(out, toJson(r.dual).dump(1) + "\n");
    json report = reportJson(r);
    report["verdict"] = r.minimality.holds ? "verified" : "refuted";
    emit(report);
    return r.minimality.holds ? kVerified : kRefuted;
}

unsigned resolveThreads(int flag)
{
    return flag < 1 ? 1u : static_cast<unsigned>(flag);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Gale-diagram constructions of illuminated and unneighborly polytopes"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 1;
    app.add_option("--threads", threads, "Worker threads for independent LP checks")->envname("GALEPOLY_THREADS");

    BuildArgs build;
    auto* buildCmd = app.add_subcommand("build", "Construct a nonsimplicial Mani polytope and certify it");
    buildCmd->add_option("--dim", build.dim, "Dimension d (>= 6)")->required();
    buildCmd->add_option("--ell", build.ell, "Number of copies of B (1 <= ell <= q-1)");
    buildCmd->add_option("--p", build.p, "Block parameter p (default p(d), 3 when d = 6)");
    buildCmd->add_option("--mode", build.mode, "full or certificate")->check(CLI::IsMember({"full", "certificate"}));
    buildCmd->add_option("--out", build.out, "Write polytope, plan and certificates here");
    buildCmd->add_flag("--geometric", build.geometric, "Full mode: cross-check against a geometric realization");

    VerifyArgs verify;
    auto* verifyCmd = app.add_subcommand("verify", "Run checks on a polytope or vector configuration document");
    verifyCmd->add_option("--input", verify.input, "Polytope or configuration JSON")->required()->check(CLI::ExistingFile);
    verifyCmd->add_option("--checks", verify.checks,
                          "Comma list: illuminated, unneighborly, simplicial, matching, gamma, kspanning:k, minimal")
        ->required()
        ->delimiter(',');
    verifyCmd->add_option("--gamma-cap", verify.gammaCap, "Vertex cap for the exhaustive gamma search");

    int maxDim = 40;
    auto* tableCmd = app.add_subcommand("table", "Print p(d), q, nu(d) and M(d)");
    tableCmd->add_option("--max-dim", maxDim, "Largest dimension")->required();

    int planDim = 0;
    std::optional<int> planP;
    std::optional<int> planEll;
    std::string planOut;
    auto* planCmd = app.add_subcommand("plan", "Emit the Gale diagram plan for a dimension");
    planCmd->add_option("--dim", planDim)->required();
    planCmd->add_option("--p", planP);
    planCmd->add_option("--ell", planEll);
    planCmd->add_option("--out", planOut);

    std::string svgInput;
    std::string svgOut;
    auto* svgCmd = app.add_subcommand("export-svg", "Draw the affine Gale diagram of a plan");
    svgCmd->add_option("--input", svgInput, "Plan JSON (or build output)")->required()->check(CLI::ExistingFile);
    svgCmd->add_option("--out", svgOut, "SVG path (stdout when omitted)");

    std::string galeInput;
    std::string galeOut;
    auto* galeCmd = app.add_subcommand("gale", "Gale duality tools");
    galeCmd->require_subcommand(1);
    for (const char* action : {"dual", "realize", "facets"})
    {
        auto* sub = galeCmd->add_subcommand(action, std::string("gale ") + action);
        sub->add_option("--input", galeInput)->required()->check(CLI::ExistingFile);
        sub->add_option("--out", galeOut);
    }

    int simplicialDim = 0;
    std::string simplicialOut;
    auto* simplicialCmd = app.add_subcommand("simplicial", "Cyclic polytope plus stacking (simplicial construction)");
    simplicialCmd->add_option("--dim", simplicialDim)->required();
    simplicialCmd->add_option("--out", simplicialOut);

    int marcusDim = 36;
    std::string marcusOut;
    auto* marcusCmd = app.add_subcommand("marcus", "Gale dual of the certified polytope and its minimality scan");
    marcusCmd->add_option("--dim", marcusDim, "Dimension (default 36)");
    marcusCmd->add_option("--out", marcusOut, "Write the dual configuration here");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return kUsageError;
    }

    const ExecOptions exec{resolveThreads(threads)};
    try
    {
        if (buildCmd->parsed())
            return runBuild(build, exec);
        if (verifyCmd->parsed())
            return runVerify(verify, exec);
        if (tableCmd->parsed())
            return runTable(maxDim);
        if (planCmd->parsed())
            return runPlan(planDim, planP, planEll, planOut);
        if (svgCmd->parsed())
            return runExportSvg(svgInput, svgOut);
        if (galeCmd->parsed())
        {
            for (const char* action : {"dual", "realize", "facets"})
                if (galeCmd->get_subcommand(action)->parsed())
                    return runGale(action, galeInput, galeOut, exec);
        }
        if (simplicialCmd->parsed())
            return runSimplicial(simplicialDim, simplicialOut);
        if (marcusCmd->parsed())
            return runMarcus(marcusDim, marcusOut, exec);
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    catch (const galepoly::Error& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
