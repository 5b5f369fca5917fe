/*
   Copyright 2026 The superpsi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <superpsi/serialize.hpp>
#include <superpsi/superpsi.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <array>
#include <map>
#include <set>
#include <sstream>

using namespace superpsi;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kOutOfScope = 3 };

struct Globals {
    unsigned long seed = 1;
    std::string out;
    int jobs = 1;
};

class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open " + path);
        }
    }
    std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

json readJson(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw invalid_spec("cannot read " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw invalid_spec(path + ": " + e.what());
    }
}

ModuleSpec readSpec(const json& j) {
    try {
        return j.get<ModuleSpec>();
    } catch (const json::exception& e) {
        throw invalid_spec(e.what());
    }
}

void requireNonResonant(const ModuleSpec& s) {
    if (s.resonant()) throw resonant_spec("n = " + s.n().str() + " is resonant for length " + std::to_string(s.l));
}

std::vector<Rational> parseList(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(Rational::parse(item));
    return out;
}

int runDecide(const Globals& g, const std::vector<std::string>& paths, bool oracle, bool audit) {
    ModuleSpec A, B;
    if (paths.size() == 2) {
        A = readSpec(readJson(paths[0]));
        B = readSpec(readJson(paths[1]));
    } else {
        json j = readJson(paths.at(0));
        if (j.is_array() && j.size() == 2) {
            A = readSpec(j[0]);
            B = readSpec(j[1]);
        } else if (j.is_object() && j.contains("a") && j.contains("b")) {
            A = readSpec(j["a"]);
            B = readSpec(j["b"]);
        } else {
            throw invalid_spec("expected two specs: [A, B] or {\"a\": A, \"b\": B}");
        }
    }
    Verdict v = oracle && sameFrame(A, B) ? genericOracle(A, B, audit) : decide(A, B);
    Output(g.out).os() << json(v).dump(2) << "\n";
    return v.outOfScope ? kOutOfScope : kOk;
}

int runBMatrix(const Globals& g, const std::string& path, bool audit) {
    ModuleSpec s = readSpec(readJson(path));
    requireNonResonant(s);
    Output(g.out).os() << bMatrixJson(s, bMatrix(s, audit)).dump(2) << "\n";
    return kOk;
}

int runInvariants(const Globals& g, const std::string& path) {
    ModuleSpec spec = readSpec(readJson(path));
    requireNonResonant(spec);
    const Rational n = spec.n();
    const GammaPoint pt = GammaPoint::of(spec);
    json out = json::object(), reasons = json::object();
    auto put = [&](const std::string& key, auto fn) {
        InvariantValue v;
        try {
            v = fn();
        } catch (const resonant_pole& e) {
            v = InvariantValue::undefined(e.what());
        }
        out[key] = invariantJson(v, pt);
        if (!v.defined) reasons[key] = v.reason;
    };
    put("I0", [&] { return invariantI(0, n, pt); });
    put("I1", [&] { return invariantI(1, n, pt); });
    put("tildeI0", [&] { return invariantTildeI(0, n, pt); });
    put("tildeI1", [&] { return invariantTildeI(1, n, pt); });
    put("J0", [&] { return invariantJ(0, n, pt); });
    put("J1", [&] { return invariantJ(1, n, pt); });
    put("tildeJ0", [&] { return invariantTildeJ(n, pt); });
    put("M", [&] { return invariantM(spec.p, n, pt); });
    put("M0", [&] { return invariantM(0, n, pt); });
    put("M1", [&] { return invariantM(1, n, pt); });
    json svc = json::array();
    for (auto& e : spec.lacunary ? lacunarySvcFactors(spec) : svcFactors(spec))
        svc.push_back({{"i", Rational(e.i2, 2)},
                       {"j", Rational(e.j2, 2)},
                       {"value", invariantJson(fromGTerm(e.value.c, e.value.gpow, pt.gamma), pt)},
                       {"zero", e.zero}});
    out["svc"] = svc;
    out["spec"] = spec;
    out["reasons"] = reasons;
    Output(g.out).os() << out.dump(2) << "\n";
    return kOk;
}

int defaultSamples(const std::string& suite) {
    static const std::map<std::string, int> d = {{"bcb", 100},      {"repr-law", 10},         {"resfacs", 50},
                                                 {"symmetry", 30},  {"oracle-agreement", 100}, {"svc-necessity", 100},
                                                 {"lacunary-3", 50}, {"lacunary-4", 50}};
    return d.at(suite);
}

int runVerify(const Globals& g, const std::string& suite, int samples) {
    if (samples <= 0) samples = defaultSamples(suite);
    SuiteReport rep = runSuite(suite, samples, g.seed);
    json results = json::array();
    for (size_t i = 0; i < rep.samples.size(); ++i) {
        json r = {{"index", i}, {"pass", rep.samples[i].pass}};
        if (!rep.samples[i].pass) r["detail"] = rep.samples[i].detail;
        results.push_back(r);
    }
    const SampleResult* f = rep.firstFailure();
    json out = {{"suite", rep.suite},
                {"seed", g.seed},
                {"samples", rep.samples.size()},
                {"passed", rep.passed()},
                {"ok", rep.ok()},
                {"firstCounterexample", f ? json(f->detail) : json(nullptr)},
                {"results", results}};
    Output(g.out).os() << out.dump(2) << "\n";
    return rep.ok() ? kOk : kFailed;
}

int runPencil(const Globals& g, const std::string& familyText, std::optional<std::string> nText,
              std::optional<std::string> coordText, const std::string& levelsText) {
    auto family = parseFamily(familyText);
    if (!family) throw invalid_spec("unknown family " + familyText + " (I0, I1, J0, M1)");
    if (nText.has_value() == coordText.has_value()) throw invalid_spec("give exactly one of --n and --N");
    // N6 for the length-6/7 families, N8 for M1
    Rational n = nText ? Rational::parse(*nText)
                       : Rational::parse(*coordText) - (*family == Family::M1 ? Rational(3, 2) : Rational(1));
    auto& os = Output(g.out).os();
    os << "family,n,level,A,B,C,D,E,F,flag\n";
    for (const Rational& level : parseList(levelsText)) {
        Conic c = pencilConic(*family, n, level);
        os << familyName(*family) << ',' << n << ',' << level << ',' << c.A << ',' << c.B << ',' << c.C << ','
           << c.D << ',' << c.E << ',' << c.F << ',' << (c.degenerate ? "degenerate: " + c.note : "") << "\n";
    }
    return kOk;
}

int runScan(const Globals& g, const std::string& nText, int sNum, int dNum, int den) {
    const Rational n = Rational::parse(nText);
    if (isResonant(n, 7)) throw resonant_spec("n = " + n.str() + " is resonant for length 7");
    struct Point {
        Rational s, delta;
    };
    // s >= 0 picks one square root per gamma; conjugates share (gamma, delta)
    std::set<Rational> sValues, dValues;
    for (int b = 1; b <= den; ++b) {
        for (int a = 0; a <= sNum * b; ++a) sValues.insert(Rational(a, b));
        for (int c = -dNum * b; c <= dNum * b; ++c) dValues.insert(Rational(c, b));
    }
    std::vector<Point> grid;
    for (auto& s : sValues)
        for (auto& d : dValues) grid.push_back({s, d});
    using Triple = std::optional<std::array<std::pair<Rational, int>, 3>>;
    auto triples = parallelMap(static_cast<int>(grid.size()), g.jobs, [&](int i) -> Triple {
        GammaPoint pt{grid[i].s * grid[i].s * 3, grid[i].delta, grid[i].s};
        try {
            InvariantValue v[3] = {invariantTildeI(0, n, pt), invariantTildeI(1, n + Rational(1, 2), pt),
                                   invariantTildeJ(n, pt)};
            std::array<std::pair<Rational, int>, 3> t;
            for (int k = 0; k < 3; ++k) {
                if (!v[k].defined) return std::nullopt;
                t[k] = {v[k].value, v[k].sqrt3parity};
            }
            return t;
        } catch (const resonant_pole&) {
            return std::nullopt;
        }
    });
    std::map<std::array<std::pair<Rational, int>, 3>, std::vector<int>> buckets;
    int defined = 0;
    for (size_t i = 0; i < grid.size(); ++i)
        if (triples[i]) {
            ++defined;
            buckets[*triples[i]].push_back(static_cast<int>(i));
        }
    json collisions = json::array();
    for (auto& [t, idx] : buckets) {
        if (idx.size() < 2) continue;
        json pts = json::array();
        for (int i : idx) pts.push_back({{"gamma", grid[i].s * grid[i].s * 3}, {"delta", grid[i].delta}});
        collisions.push_back({{"tildeI0", t[0].first}, {"tildeI1", t[1].first}, {"tildeJ0", t[2].first}, {"points", pts}});
    }
    json out = {{"n", n}, {"points", grid.size()}, {"defined", defined}, {"collisions", collisions}};
    Output(g.out).os() << out.dump(2) << "\n";
    return kOk;
}

int runLge15(const Globals& g, int trials, std::optional<std::string> nText, int p) {
    std::optional<Rational> fixed;
    if (nText) fixed = Rational::parse(*nText);
    auto reports = verifyLge15(trials, g.seed, fixed, p, g.jobs);
    auto& os = Output(g.out).os();
    bool ok = true;
    for (auto& r : reports) {
        json sol = json::array();
        for (auto& s : r.solutions) sol.push_back({{"gamma", s.gamma1}, {"delta", s.delta1}});
        os << json{{"trial", r.trial},
                   {"n", r.n},
                   {"p", r.p},
                   {"gamma", r.gamma},
                   {"delta", r.delta},
                   {"solutions", sol},
                   {"unique", r.unique},
                   {"degenerate", r.degenerate},
                   {"maxDegreeBefore", r.degreesBefore},
                   {"maxDegreeAfter", r.degreesAfter},
                   {"seconds", r.seconds}}
                  .dump()
           << "\n";
        ok = ok && r.unique;
    }
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superpsi: equivalence of superdensity pseudodifferential modules"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--out", g.out, "write output to this path instead of stdout");
    app.add_option("--jobs", g.jobs, "worker threads for sample batches")->capture_default_str()->check(CLI::PositiveNumber);

    std::function<int()> action;

    auto* decideCmd = app.add_subcommand("decide", "decide equivalence of two module specs");
    std::vector<std::string> decidePaths;
    bool useOracle = false, audit = false;
    decideCmd->add_option("specs", decidePaths, "two spec files, or one file holding both ('-' reads stdin)")
        ->required()
        ->expected(1, 2);
    decideCmd->add_flag("--oracle", useOracle, "use the generic b-matrix oracle");
    decideCmd->add_flag("--audit", audit, "cross-check every b-value against extraction");
    decideCmd->callback([&] { action = [&] { return runDecide(g, decidePaths, useOracle, audit); }; });

    auto* bmCmd = app.add_subcommand("bmatrix", "b-values of a module spec");
    std::string bmPath;
    bmCmd->add_option("spec", bmPath, "spec file")->required();
    bmCmd->add_flag("--audit", audit, "cross-check every b-value against extraction");
    bmCmd->callback([&] { action = [&] { return runBMatrix(g, bmPath, audit); }; });

    auto* invCmd = app.add_subcommand("invariants", "invariant table of a module spec");
    std::string invPath;
    invCmd->add_option("spec", invPath, "spec file")->required();
    invCmd->callback([&] { action = [&] { return runInvariants(g, invPath); }; });

    auto* verCmd = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    int samples = 0;
    verCmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suiteNames()));
    verCmd->add_option("--samples", samples, "samples (suite default when omitted)");
    verCmd->callback([&] { action = [&] { return runVerify(g, suite, samples); }; });

    auto* penCmd = app.add_subcommand("pencil", "level-set conics of an invariant as CSV");
    std::string family, levels = "-2,-1,0,1,2";
    std::optional<std::string> penN, penCoord;
    penCmd->add_option("--family", family, "I0, I1, J0 or M1")->required();
    penCmd->add_option("--n", penN, "module n");
    penCmd->add_option("--N", penCoord, "N6 (I0, I1, J0) or N8 (M1)");
    penCmd->add_option("--levels", levels, "comma-separated rational levels")->capture_default_str();
    penCmd->callback([&] { action = [&] { return runPencil(g, family, penN, penCoord, levels); }; });

    auto* scanCmd = app.add_subcommand("scan", "search a (gamma, delta) grid for coinciding length-7 invariants");
    std::string scanN;
    int sBound = 3, dBound = 3, den = 3;
    scanCmd->add_option("--n", scanN, "module n")->required();
    scanCmd->add_option("--s-bound", sBound, "gamma^{1/2}/sqrt3 ranges over [0, bound]")->capture_default_str();
    scanCmd->add_option("--delta-bound", dBound, "delta ranges over [-bound, bound]")->capture_default_str();
    scanCmd->add_option("--den", den, "largest grid denominator")->capture_default_str();
    scanCmd->callback([&] { action = [&] { return runScan(g, scanN, sBound, dBound, den); }; });

    auto* lgeCmd = app.add_subcommand("lge15", "elimination trials for long modules");
    int trials = 5, lgeP = 0;
    std::optional<std::string> lgeN;
    lgeCmd->add_option("--trials", trials, "number of trials")->capture_default_str();
    lgeCmd->add_option("--n", lgeN, "fixed n");
    lgeCmd->add_option("--p", lgeP, "parity")->capture_default_str()->check(CLI::Range(0, 1));
    lgeCmd->callback([&] { action = [&] { return runLge15(g, trials, lgeN, lgeP); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }
    try {
        return action();
    } catch (const resonant_spec& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return kOutOfScope;
    } catch (const resonance_or_degeneracy& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return kOutOfScope;
    } catch (const resonant_pole& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return kOutOfScope;
    } catch (const invalid_spec& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const parse_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
}
