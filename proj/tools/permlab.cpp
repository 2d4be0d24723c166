#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "permlab/ajt.hpp"
#include "permlab/error.hpp"
#include "permlab/families.hpp"
#include "permlab/permideal.hpp"
#include "permlab/scenarios.hpp"

using namespace permlab;

namespace {

struct Global {
    std::string field;
    uint64_t seed = 0;
    bool has_seed = false;
    size_t budget_nodes = 0;
    std::string json_out;
    size_t threads = 1;
};

int exit_for(ScenarioStatus s) {
    switch (s) {
    case ScenarioStatus::pass:
    case ScenarioStatus::evidence: return 0;
    case ScenarioStatus::budget_exceeded: return 3;
    case ScenarioStatus::fail: return 1;
    }
    return 1;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

void emit_json(const Global& g, const nlohmann::ordered_json& j) {
    std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (!g.json_out.empty()) write_text(g.json_out, text);
}

int emit_report(const Global& g, const ScenarioReport& rep) {
    emit_json(g, rep.to_json());
    std::cerr << rep.summary_line() << "\n";
    return exit_for(rep.status);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const Field* global_field(const Global& g) {
    return g.field.empty() ? Field::rationals() : Field::parse(g.field);
}

ScenarioArgs base_args(const Global& g) {
    ScenarioArgs a;
    a.field = g.field;
    a.seed = g.seed;
    a.has_seed = g.has_seed;
    a.cache = &GroebnerCache::global();
    return a;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"permlab: exact computations around permanental ideals of generic matrices"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--field", g.field, "coefficient field: QQ, QQi, F<p>, GF<p>^<k>");
    auto* seed_opt =
        app.add_option("--seed", g.seed, "seed for randomized scenarios (recorded in reports)");
    app.add_option("--budget-nodes", g.budget_nodes,
                   "cap on Groebner basis size for membership queries");
    app.add_option("--json-out", g.json_out, "also write the JSON output to this path");
    app.add_option("--threads", g.threads, "reserved; every run is currently serial");

    // ideal gens
    auto* ideal = app.add_subcommand("ideal", "permanental ideal construction");
    ideal->require_subcommand(1);
    auto* gens = ideal->add_subcommand("gens", "print the generators of I_d(m,n)");
    size_t gi_d = 0, gi_m = 0, gi_n = 0;
    gens->add_option("--d", gi_d, "subpermanent size")->required();
    gens->add_option("--m", gi_m, "rows")->required();
    gens->add_option("--n", gi_n, "columns")->required();

    // verify <identity>
    auto* verify = app.add_subcommand("verify", "symbolic identity checks");
    verify->require_subcommand(1);
    size_t v_d = 0, v_n = 0;
    auto* v_evid = verify->add_subcommand("evid", "combination identity at n = 2d-1");
    v_evid->add_option("--d", v_d, "permanent size (default 2,3,4)");
    auto* v_preevid = verify->add_subcommand("preevid", "combination identity at d < n < 2d-1");
    v_preevid->add_option("--d", v_d, "permanent size");
    v_preevid->add_option("--n", v_n, "columns");
    auto* v_structj = verify->add_subcommand("structj", "cofactor identities for the block ideal");
    v_structj->add_option("--d", v_d, "permanent size (default 2,3)");
    auto* v_hrank = verify->add_subcommand("h-rank", "vanishing minors of the permanent matrix");
    v_hrank->add_option("--d", v_d, "permanent size");
    v_hrank->add_option("--n", v_n, "columns");

    // certificate moncor
    auto* cert = app.add_subcommand("certificate", "explicit membership certificates");
    cert->require_subcommand(1);
    auto* moncor = cert->add_subcommand(
        "moncor", "certificate that c times the entry product lies in I_d(d,2d-1)");
    size_t c_d = 0;
    std::string c_out;
    moncor->add_option("--d", c_d, "permanent size")->required();
    moncor->add_option("--out", c_out, "write the certificate JSON here");

    // gb membership
    auto* gb = app.add_subcommand("gb", "Groebner engine queries");
    gb->require_subcommand(1);
    auto* member = gb->add_subcommand("membership", "normal form of a polynomial");
    std::string m_ideal, m_poly, m_order = "degrevlex";
    member->add_option("--ideal", m_ideal, "ideal basis file (serialize format)")->required();
    member->add_option("--poly", m_poly, "polynomial in the basis ring")->required();
    member->add_option("--order", m_order, "degrevlex or lex");

    // scenario <name>
    auto* scen = app.add_subcommand("scenario", "run one named scenario");
    std::string s_name;
    size_t s_d = 0, s_m = 0, s_n = 0;
    uint32_t s_q = 0;
    std::string s_v;
    uint64_t s_trials = 0;
    scen->add_option("name", s_name, "one of: " + [] {
                         std::string all;
                         for (const auto& n : scenario_names())
                             all += (all.empty() ? "" : ", ") + n;
                         return all;
                     }())
        ->required();
    scen->add_option("--d", s_d, "size override");
    scen->add_option("--m", s_m, "row override");
    scen->add_option("--n", s_n, "column override");
    scen->add_option("--q", s_q, "field order override");
    scen->add_option("--v", s_v, "block-size sequence, e.g. 2,2");
    scen->add_option("--trials", s_trials, "trial count override");

    // ajt ...
    auto* ajt = app.add_subcommand("ajt", "witness searches and censuses");
    ajt->require_subcommand(1);
    auto* witness = ajt->add_subcommand("witness", "first fully supported image of a matrix");
    std::string w_matrix;
    witness->add_option("--matrix", w_matrix, "matrix JSON file")->required();
    auto* nowit = ajt->add_subcommand("classify-nowitness",
                                      "tag every witness-free d x n matrix over F_q");
    size_t nw_d = 0, nw_n = 0;
    uint32_t nw_q = 0;
    nowit->add_option("--d", nw_d, "rows")->required();
    nowit->add_option("--n", nw_n, "columns")->required();
    nowit->add_option("--q", nw_q, "field order")->required();
    auto* bbls = ajt->add_subcommand("bblsgen", "random invertible matrices all have witnesses");
    uint32_t bb_q = 0;
    uint64_t bb_trials = 0;
    size_t bb_d = 0;
    bbls->add_option("--q", bb_q, "field order (>= 4)")->required();
    bbls->add_option("--trials", bb_trials, "sample count");
    bbls->add_option("--d", bb_d, "matrix size (default 4)");

    // enumerate variety
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive solution scans");
    enumerate->require_subcommand(1);
    auto* variety = enumerate->add_subcommand("variety", "count (and tag) the solutions over F_q");
    size_t e_d = 0, e_m = 0, e_n = 0;
    uint32_t e_q = 0;
    bool e_classify = false;
    variety->add_option("--d", e_d, "subpermanent size")->required();
    variety->add_option("--m", e_m, "rows")->required();
    variety->add_option("--n", e_n, "columns")->required();
    variety->add_option("--q", e_q, "field order")->required();
    variety->add_flag("--classify", e_classify, "tag every solution with its component");

    // family ...
    auto* family = app.add_subcommand("family", "matrix families with vanishing permanents");
    family->require_subcommand(1);
    auto* fshow = family->add_subcommand("show", "print a family instance");
    std::string f_id;
    size_t f_d = 0;
    fshow->add_option("--id", f_id, "family id")->required();
    fshow->add_option("--d", f_d, "size (dxd1 only)");
    auto* fverify = family->add_subcommand("verify", "check that every permanent vanishes");
    fverify->add_option("--id", f_id, "family id")->required();
    fverify->add_option("--d", f_d, "size (dxd1 only)");
    auto* fall = family->add_subcommand("verify-all", "verify every family plus the point checks");

    // suite <name>
    auto* suite = app.add_subcommand("suite", "run a scenario group");
    std::string suite_name;
    suite->add_option("name", suite_name, "identities, containments, enumerations, searches, all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g.has_seed = seed_opt->count() > 0;

    try {
        if (gens->parsed()) {
            IdealBasis basis = permanental_ideal(global_field(g), gi_d, gi_m, gi_n);
            std::string text = basis.serialize();
            std::cout << text;
            if (!g.json_out.empty()) write_text(g.json_out, text);
            std::cerr << basis.label << ": " << basis.gens.size() << " generators\n";
            return 0;
        }

        if (v_evid->parsed() || v_preevid->parsed() || v_structj->parsed() ||
            v_hrank->parsed()) {
            ScenarioArgs args = base_args(g);
            args.d = v_d;
            args.n = v_n;
            std::string name = v_evid->parsed()      ? "evid"
                               : v_preevid->parsed() ? "preevid"
                               : v_structj->parsed() ? "structj"
                                                     : "h-rank";
            return emit_report(g, run_scenario(name, args));
        }

        if (moncor->parsed()) {
            Timer timer;
            ScenarioReport rep;
            rep.scenario = "moncor-certificate";
            rep.param("d", (long long)c_d);
            MembershipCertificate c = moncor_certificate(c_d);
            IdealBasis basis = permanental_ideal(Field::rationals(), c_d, c_d, 2 * c_d - 1);
            IdentityReport ver = verify_certificate(c, basis);
            rep.require(ver.pass, "certificate identity against " + basis.label);
            rep.note("c = " + c.c.get_str());
            rep.count("coefficients", (long long)c.pairs.size());
            if (!c_out.empty()) {
                write_text(c_out, c.to_json().dump(2) + "\n");
                rep.artifacts.push_back(c_out);
            }
            rep.runtime_ms = timer.ms();
            return emit_report(g, rep);
        }

        if (member->parsed()) {
            Timer timer;
            IdealBasis basis = IdealBasis::deserialize(read_file(m_ideal));
            MonomialOrder order;
            if (m_order == "lex")
                order = MonomialOrder::lex();
            else if (m_order == "degrevlex")
                order = MonomialOrder::degrevlex();
            else
                throw ArgError("unknown order: " + m_order);
            Poly poly = Poly::parse(basis.ring, m_poly);
            GroebnerOptions opts;
            opts.order = order;
            if (g.budget_nodes) opts.max_basis = g.budget_nodes;
            const std::vector<Poly>& basis_gb = GroebnerCache::global().get(basis.gens, opts);
            MembershipResult res = ideal_member(poly, basis_gb, order);
            ScenarioReport rep;
            rep.scenario = "gb-membership";
            rep.param("ideal", basis.label.empty() ? m_ideal : basis.label);
            rep.param("order", order.name());
            rep.param("poly", m_poly);
            rep.count("generators", (long long)basis.gens.size());
            rep.count("basis", (long long)basis_gb.size());
            rep.require(res.member, "normal form is zero");
            if (!res.member) rep.note("remainder: " + res.remainder.str());
            rep.runtime_ms = timer.ms();
            return emit_report(g, rep);
        }

        if (scen->parsed()) {
            ScenarioArgs args = base_args(g);
            args.d = s_d;
            args.m = s_m;
            args.n = s_n;
            args.q = s_q;
            args.v = s_v;
            args.trials = s_trials;
            return emit_report(g, run_scenario(s_name, args));
        }

        if (witness->parsed()) {
            Timer timer;
            ScalarMatrix m = ScalarMatrix::from_json(nlohmann::ordered_json::parse(
                read_file(w_matrix)));
            WitnessReport w = find_witness(m);
            ScenarioReport rep;
            rep.scenario = "ajt-witness";
            rep.param("matrix", w_matrix);
            rep.param("shape", std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
            rep.param("field", m.field()->name());
            rep.count("nodes", (long long)w.nodes);
            if (w.witness) {
                std::string x;
                for (const Scalar& s : *w.witness) x += (x.empty() ? "" : ", ") + s.str();
                rep.note("witness: (" + x + ")");
            } else {
                rep.require(false, "a fully supported image exists");
            }
            rep.runtime_ms = timer.ms();
            return emit_report(g, rep);
        }

        if (nowit->parsed()) {
            ScenarioArgs args = base_args(g);
            args.d = nw_d;
            args.n = nw_n;
            args.q = nw_q;
            return emit_report(g, run_scenario("ajtdplus1", args));
        }

        if (bbls->parsed()) {
            ScenarioArgs args = base_args(g);
            args.q = bb_q;
            args.d = bb_d;
            args.trials = bb_trials;
            return emit_report(g, run_scenario("bblsgen", args));
        }

        if (variety->parsed()) {
            Timer timer;
            const Field* f = field_from_q(e_q);
            ScenarioReport rep;
            rep.scenario = "enumerate-variety";
            rep.param("d", (long long)e_d);
            rep.param("m", (long long)e_m);
            rep.param("n", (long long)e_n);
            rep.param("field", f->name());
            if (e_classify) {
                ClassifyContext ctx;
                if (e_d == 2 && e_m == 2 && e_n == 3)
                    ctx = ClassifyContext::c23;
                else if (e_d == 3 && e_m == 3 && e_n == 5)
                    ctx = ClassifyContext::c35;
                else if (e_d == 3 && e_m == 4 && e_n == 4)
                    ctx = ClassifyContext::c44;
                else
                    throw ArgError("no component classifier for this shape");
                VarietySummary sum = variety_classified(f, e_d, e_m, e_n, ctx);
                rep.count("solutions", (long long)sum.solutions);
                rep.count("unclassified", (long long)sum.unclassified);
                for (const auto& [tag, cnt] : sum.by_tag) rep.count(tag, (long long)cnt);
                rep.require(sum.unclassified == 0, "every solution lies on a listed component");
            } else {
                uint64_t count = variety_enumerate(f, e_d, e_m, e_n,
                                                   [](const std::vector<uint32_t>&) {
                                                       return true;
                                                   });
                rep.count("solutions", (long long)count);
            }
            rep.runtime_ms = timer.ms();
            return emit_report(g, rep);
        }

        if (fshow->parsed()) {
            Family fam = family_matrix(f_id, f_d);
            nlohmann::ordered_json j;
            j["schema"] = 1;
            j["id"] = fam.id;
            j["d"] = fam.d;
            j["rows"] = fam.rows();
            j["cols"] = fam.cols();
            if (fam.numeric)
                j["field"] = fam.numeric->field()->name();
            else
                j["params"] = fam.params;
            auto rows = nlohmann::ordered_json::array();
            for (size_t i = 0; i < fam.rows(); ++i) {
                auto row = nlohmann::ordered_json::array();
                for (size_t jx = 0; jx < fam.cols(); ++jx)
                    row.push_back(fam.numeric ? fam.numeric->at(i, jx).str()
                                              : fam.symbolic->at(i, jx).str());
                rows.push_back(std::move(row));
            }
            j["entries"] = std::move(rows);
            emit_json(g, j);
            std::cerr << fam.id << ": " << fam.rows() << "x" << fam.cols() << "\n";
            return 0;
        }

        if (fverify->parsed()) {
            Timer timer;
            FamilyReport r = verify_family(f_id, f_d);
            ScenarioReport rep;
            rep.scenario = "family-verify";
            rep.param("id", r.id);
            rep.param("d", (long long)r.d);
            rep.count("permanents", (long long)r.checked);
            rep.require(r.pass, "every maximal permanent vanishes");
            for (const std::string& bad : r.failing) rep.note(bad);
            rep.runtime_ms = timer.ms();
            return emit_report(g, rep);
        }

        if (fall->parsed()) return emit_report(g, run_scenario("families", base_args(g)));

        if (suite->parsed()) {
            SuiteReport s = run_suite(suite_name, g.seed);
            emit_json(g, s.to_json());
            for (const ScenarioReport& rep : s.scenarios)
                std::cerr << "  " << rep.summary_line() << "\n";
            std::cerr << status_str(s.status) << "  suite " << s.suite << " ("
                      << s.scenarios.size() << " scenarios, " << s.runtime_ms << " ms)\n";
            return exit_for(s.status);
        }
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad json: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "no subcommand\n";
    return 2;
}
