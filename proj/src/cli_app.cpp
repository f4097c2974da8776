#include "eqsc/cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "eqsc/engine.hpp"
#include "eqsc/errors.hpp"
#include "eqsc/oracle.hpp"

namespace eqsc {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct JobConfig {
    std::string command;
    std::string group;
    std::vector<int> parabolic; // 1-based indices of the parabolic set
    std::string u, v, w;
    std::string d;
    int beta = 0; // 1-based simple index, chevalley only
    std::string format = "text";
    bool prune = true;
    int threads = 1;
    std::string oracle;
    int max_weight = -1;
};

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ' ' || ch == ',' || ch == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw UsageError("");
        return value;
    } catch (const UsageError&) {
    } catch (const std::exception&) {
    }
    throw UsageError("expected an integer for " + what + ", got \"" + tok + "\"");
}

Limits make_limits() {
    Limits limits;
    if (const char* env = std::getenv("EQSC_MAX_RANK")) {
        std::string text(env);
        if (!text.empty()) {
            int value = parse_int(text, "EQSC_MAX_RANK");
            if (value < 1) throw UsageError("EQSC_MAX_RANK must be positive");
            limits.max_rank = value;
        }
    }
    return limits;
}

CartanData make_cartan(const std::string& group) {
    if (group.empty()) throw UsageError("--group is required");
    if (group.front() == '[') {
        json parsed;
        try {
            parsed = json::parse(group);
        } catch (const std::exception& e) {
            throw UsageError(std::string("could not parse the Cartan matrix: ") + e.what());
        }
        if (!parsed.is_array()) throw UsageError("a Cartan matrix must be an array of rows");
        std::vector<std::vector<int>> m;
        for (const auto& row : parsed) {
            if (!row.is_array()) throw UsageError("a Cartan matrix must be an array of rows");
            std::vector<int> r;
            for (const auto& cell : row) {
                if (!cell.is_number_integer())
                    throw NonIntegralInputError("Cartan entries must be integers");
                r.push_back(cell.get<int>());
            }
            m.push_back(std::move(r));
        }
        return CartanData::from_matrix(m);
    }
    return CartanData::preset(group);
}

std::shared_ptr<const ParabolicQuotient> make_quotient(const JobConfig& cfg) {
    CartanData cd = make_cartan(cfg.group);
    auto rs = std::make_shared<const RootSystemData>(build_root_system(cd, make_limits()));
    std::vector<int> levi;
    for (int i : cfg.parabolic) {
        if (i < 1 || i > rs->rank)
            throw UsageError("--parabolic index " + std::to_string(i) + " is out of range 1.." +
                             std::to_string(rs->rank));
        levi.push_back(i - 1);
    }
    return std::make_shared<const ParabolicQuotient>(rs, levi);
}

int parse_element(const ParabolicQuotient& q, const std::string& text, const std::string& which) {
    std::vector<std::string> toks = tokenize(text);
    if (toks.empty()) throw UsageError("--" + which + " needs a word (\"e\" for the identity)");
    if (toks.size() == 1 && (toks[0] == "e" || toks[0] == "E")) {
        return q.index_of(WeylElem::identity(q.rank()));
    }
    std::vector<int> letters;
    for (const std::string& tok : toks) {
        int letter = parse_int(tok, "--" + which);
        if (letter < 1 || letter > q.rank())
            throw UsageError("--" + which + " letter " + std::to_string(letter) +
                             " is out of range 1.." + std::to_string(q.rank()));
        letters.push_back(letter - 1);
    }
    return q.index_of(q.ctx().from_word(letters));
}

DegreeVec parse_degree(const QuantumGrading& g, const std::string& text) {
    if (text.empty()) return g.zero();
    std::vector<std::string> toks = tokenize(text);
    if (static_cast<int>(toks.size()) != g.qvars())
        throw UsageError("--d needs exactly " + std::to_string(g.qvars()) +
                         " coordinates for this quotient");
    DegreeVec d;
    for (const std::string& tok : toks) {
        int c = parse_int(tok, "--d");
        if (c < 0) throw UsageError("--d coordinates must be nonnegative");
        d.push_back(c);
    }
    return d;
}

std::string display_element(const ParabolicQuotient& q, int idx) {
    std::string word = q.elem_string(idx);
    if (word == "e") return "e";
    std::string out;
    for (const std::string& tok : tokenize(word)) {
        if (!out.empty()) out += " ";
        out += "s" + tok;
    }
    return out;
}

std::string sigma_str(const ParabolicQuotient& q, int idx) {
    return "σ(" + display_element(q, idx) + ")";
}

std::string term_str(const ParabolicQuotient& q, const Polynomial& c, const DegreeVec& d,
                     int w) {
    std::string out;
    if (!(c.is_constant() && c.constant_term() == 1)) {
        if (c.term_count() > 1)
            out += "(" + c.str() + ")";
        else
            out += c.str();
    }
    std::string qm = QuantumGrading::q_monomial(d);
    if (qm != "1") {
        if (!out.empty()) out += "·";
        out += qm;
    }
    if (!out.empty()) out += "·";
    out += sigma_str(q, w);
    return out;
}

std::string class_vector_str(const ParabolicQuotient& q, const ClassVector& cv) {
    if (cv.empty()) return "0";
    std::string out;
    for (const auto& [key, p] : cv) {
        const auto& [wd, d, w] = key;
        (void)wd;
        if (!out.empty()) out += " + ";
        out += term_str(q, p, d, w);
    }
    return out;
}

json coeff_json_value(const Int& c) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (c >= lo && c <= hi) return json(static_cast<long long>(c));
    return json(c.str());
}

json poly_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) {
        json term;
        term["coeff"] = coeff_json_value(c);
        term["exps"] = e;
        arr.push_back(std::move(term));
    }
    return arr;
}

json class_vector_json(const ParabolicQuotient& q, const ClassVector& cv) {
    json arr = json::array();
    for (const auto& [key, p] : cv) {
        const auto& [wd, d, w] = key;
        (void)wd;
        json term;
        term["w"] = q.elem_string(w);
        term["d"] = d;
        term["poly"] = poly_json(p);
        arr.push_back(std::move(term));
    }
    return arr;
}

constexpr const char* kVariableNote = "x_i = −β_i (negative simple root)";

void print_header(std::ostream& out, const JobConfig& cfg, const ParabolicQuotient& q) {
    out << "# group " << cfg.group << ", parabolic {";
    for (size_t i = 0; i < cfg.parabolic.size(); ++i) {
        if (i) out << ",";
        out << cfg.parabolic[i];
    }
    out << "}, dimension " << q.dim() << "\n";
    out << "# " << kVariableNote << "\n";
}

int run_coeff(const JobConfig& cfg, std::ostream& out) {
    auto q = make_quotient(cfg);
    EqlrEngine eng(q, {cfg.prune, cfg.threads});
    int u = parse_element(*q, cfg.u, "u");
    int v = parse_element(*q, cfg.v, "v");
    int w = parse_element(*q, cfg.w, "w");
    DegreeVec d = parse_degree(eng.grading(), cfg.d);
    const Polynomial& p = eng.coeff(u, v, w, d);
    if (cfg.format == "json") {
        ordered_json rec;
        rec["u"] = q->elem_string(u);
        rec["v"] = q->elem_string(v);
        rec["w"] = q->elem_string(w);
        rec["d"] = d;
        rec["poly"] = poly_json(p);
        out << rec.dump(2) << "\n";
    } else {
        out << p.str() << "\n";
    }
    return 0;
}

int run_product(const JobConfig& cfg, std::ostream& out) {
    auto q = make_quotient(cfg);
    EqlrEngine eng(q, {cfg.prune, cfg.threads});
    int u = parse_element(*q, cfg.u, "u");
    int v = parse_element(*q, cfg.v, "v");
    ClassVector cv = eng.multiply(u, v);
    if (cfg.format == "json") {
        ordered_json rec;
        rec["u"] = q->elem_string(u);
        rec["v"] = q->elem_string(v);
        rec["note"] = kVariableNote;
        rec["terms"] = class_vector_json(*q, cv);
        out << rec.dump(2) << "\n";
    } else {
        print_header(out, cfg, *q);
        out << sigma_str(*q, u) << " ∘ " << sigma_str(*q, v) << " = "
            << class_vector_str(*q, cv) << "\n";
    }
    return 0;
}

int run_table(const JobConfig& cfg, std::ostream& out) {
    auto q = make_quotient(cfg);
    EqlrEngine eng(q, {cfg.prune, cfg.threads});
    if (cfg.format == "json") {
        ordered_json rec;
        rec["group"] = cfg.group;
        rec["parabolic"] = cfg.parabolic;
        rec["note"] = kVariableNote;
        json classes = json::array();
        for (int i = 0; i < q->size(); ++i) {
            json cl;
            cl["w"] = q->elem_string(i);
            cl["codim"] = q->codim(i);
            classes.push_back(std::move(cl));
        }
        rec["classes"] = classes;
        json products = json::array();
        for (int u = 0; u < q->size(); ++u) {
            for (int v = u; v < q->size(); ++v) {
                json pr;
                pr["u"] = q->elem_string(u);
                pr["v"] = q->elem_string(v);
                pr["terms"] = class_vector_json(*q, eng.multiply(u, v));
                products.push_back(std::move(pr));
            }
        }
        rec["products"] = products;
        out << rec.dump(2) << "\n";
    } else {
        print_header(out, cfg, *q);
        out << "# classes:";
        for (int i = 0; i < q->size(); ++i)
            out << " " << sigma_str(*q, i) << "[" << q->codim(i) << "]";
        out << "\n";
        for (int u = 0; u < q->size(); ++u) {
            for (int v = u; v < q->size(); ++v) {
                out << sigma_str(*q, u) << " ∘ " << sigma_str(*q, v) << " = "
                    << class_vector_str(*q, eng.multiply(u, v)) << "\n";
            }
        }
    }
    return 0;
}

int run_chevalley(const JobConfig& cfg, std::ostream& out) {
    auto q = make_quotient(cfg);
    EqlrEngine eng(q, {cfg.prune, cfg.threads});
    if (cfg.beta < 1 || cfg.beta > q->rank())
        throw UsageError("--beta is out of range 1.." + std::to_string(q->rank()));
    int pos = -1;
    for (size_t k = 0; k < q->free_indices().size(); ++k)
        if (q->free_indices()[k] == cfg.beta - 1) pos = static_cast<int>(k);
    if (pos < 0)
        throw UsageError("--beta " + std::to_string(cfg.beta) +
                         " lies in the parabolic set and names no divisor class");
    int w = parse_element(*q, cfg.w, "w");
    const ChevalleyExpansion& ex = eng.chevalley().expand(pos, w);
    ClassVector cv;
    const QuantumGrading& g = eng.grading();
    if (!ex.diag.is_zero()) cv.emplace(std::make_tuple(0, g.zero(), w), ex.diag);
    for (const ChevalleyTerm& t : ex.classical)
        cv.emplace(std::make_tuple(0, g.zero(), t.target), Polynomial::constant(q->rank(), t.h));
    for (const ChevalleyTerm& t : ex.quantum)
        cv.emplace(std::make_tuple(g.weighted_deg(t.deg), t.deg, t.target),
                   Polynomial::constant(q->rank(), t.h));
    int s = q->s_of_beta(pos);
    if (cfg.format == "json") {
        ordered_json rec;
        rec["beta"] = cfg.beta;
        rec["divisor"] = q->elem_string(s);
        rec["w"] = q->elem_string(w);
        rec["note"] = kVariableNote;
        rec["terms"] = class_vector_json(*q, cv);
        out << rec.dump(2) << "\n";
    } else {
        print_header(out, cfg, *q);
        out << sigma_str(*q, s) << " ∘ " << sigma_str(*q, w) << " = "
            << class_vector_str(*q, cv) << "\n";
    }
    return 0;
}

int report_out(const OracleReport& rep, const std::string& name, const JobConfig& cfg,
               std::ostream& out) {
    if (cfg.format == "json") {
        ordered_json rec;
        rec["check"] = name;
        rec["checked"] = rep.checked;
        rec["failed"] = rep.failed;
        rec["examples"] = rep.examples;
        out << rec.dump(2) << "\n";
    } else {
        out << "check " << name << ": " << rep.checked << " checked, " << rep.failed
            << " failed\n";
        for (const std::string& ex : rep.examples) out << "  " << ex << "\n";
    }
    return rep.ok() ? 0 : 2;
}

int run_check(const JobConfig& cfg, std::ostream& out) {
    if (cfg.oracle == "pn") {
        if (cfg.group != "A1" && cfg.group != "A2" && cfg.group != "A3")
            throw UsageError("the projective check needs --group A1, A2 or A3");
        int n = cfg.group[1] - '0';
        return report_out(projective_space_check(n), "pn", cfg, out);
    }
    auto q = make_quotient(cfg);
    EqlrEngine eng(q, {cfg.prune, cfg.threads});
    if (cfg.oracle == "billey") return report_out(billey_check(eng), "billey", cfg, out);
    if (cfg.oracle == "gkm") return report_out(gkm_check(eng), "gkm", cfg, out);
    if (cfg.oracle.empty())
        return report_out(invariant_check(eng, cfg.max_weight), "invariants", cfg, out);
    throw UsageError("unknown --oracle \"" + cfg.oracle + "\" (billey, gkm or pn)");
}

void overlay_config_file(JobConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("could not open config file " + path);
    json parsed;
    try {
        parsed = json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError(std::string("could not parse config file: ") + e.what());
    }
    if (!parsed.is_object()) throw UsageError("the config file must hold a JSON object");
    for (const auto& [key, value] : parsed.items()) {
        try {
            if (key == "group") {
                cfg.group = value.is_string() ? value.get<std::string>() : value.dump();
            } else if (key == "parabolic") {
                cfg.parabolic = value.get<std::vector<int>>();
            } else if (key == "u") {
                cfg.u = value.get<std::string>();
            } else if (key == "v") {
                cfg.v = value.get<std::string>();
            } else if (key == "w") {
                cfg.w = value.get<std::string>();
            } else if (key == "d") {
                if (value.is_string()) {
                    cfg.d = value.get<std::string>();
                } else {
                    std::string joined;
                    for (const auto& c : value) {
                        if (!joined.empty()) joined += ",";
                        joined += std::to_string(c.get<int>());
                    }
                    cfg.d = joined;
                }
            } else if (key == "beta") {
                cfg.beta = value.get<int>();
            } else if (key == "format") {
                cfg.format = value.get<std::string>();
            } else if (key == "prune") {
                cfg.prune = value.get<bool>();
            } else if (key == "threads") {
                cfg.threads = value.get<int>();
            } else if (key == "oracle") {
                cfg.oracle = value.get<std::string>();
            } else if (key == "max_weight") {
                cfg.max_weight = value.get<int>();
            } else {
                throw UsageError("unknown config key \"" + key + "\"");
            }
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("config key \"" + key + "\" has the wrong type");
        }
    }
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"equivariant small quantum products in exact arithmetic"};
    app.require_subcommand(1);

    JobConfig cli;
    std::string config_path;
    struct Sub {
        CLI::App* app = nullptr;
        CLI::Option *group = nullptr, *parabolic = nullptr, *u = nullptr, *v = nullptr,
                    *w = nullptr, *d = nullptr, *beta = nullptr, *format = nullptr,
                    *noprune = nullptr, *threads = nullptr, *oracle = nullptr,
                    *max_weight = nullptr, *config = nullptr;
    };
    bool no_prune_flag = false;
    auto add_common = [&](CLI::App* sub) {
        Sub s;
        s.app = sub;
        s.group = sub->add_option("--group", cli.group,
                                  "group preset (A1..A8, B2.., C2.., D4.., E6..E8, F4, G2) or a "
                                  "JSON Cartan matrix");
        s.parabolic = sub->add_option("--parabolic", cli.parabolic,
                                      "1-based simple indices of the parabolic set")
                          ->delimiter(',');
        s.u = sub->add_option("--u", cli.u, "first factor, a word like \"1 2 1\" or \"e\"");
        s.v = sub->add_option("--v", cli.v, "second factor");
        s.w = sub->add_option("--w", cli.w, "target class");
        s.d = sub->add_option("--d", cli.d, "degree vector, e.g. \"1,0\" (default all zero)");
        s.beta = sub->add_option("--beta", cli.beta, "1-based simple index of the divisor");
        s.format = sub->add_option("--format", cli.format, "output format: text or json")
                       ->check(CLI::IsMember({"text", "json"}));
        s.noprune = sub->add_flag("--no-prune", no_prune_flag,
                                  "disable the vanishing shortcuts (slower, same results)");
        s.threads = sub->add_option("--threads", cli.threads, "worker threads (default 1)");
        s.oracle =
            sub->add_option("--oracle", cli.oracle, "check flavor: billey, gkm or pn");
        s.max_weight =
            sub->add_option("--max-weight", cli.max_weight, "weighted degree bound for checks");
        s.config = sub->add_option("--config", config_path, "JSON config file; flags override");
        return s;
    };

    Sub c_coeff = add_common(app.add_subcommand("coeff", "one structure constant"));
    Sub c_product = add_common(app.add_subcommand("product", "full product of two classes"));
    Sub c_table = add_common(app.add_subcommand("table", "all pairwise products"));
    Sub c_chev =
        add_common(app.add_subcommand("chevalley", "direct expansion of a divisor product"));
    Sub c_check = add_common(app.add_subcommand("check", "self-checks and oracle comparisons"));

    std::vector<const char*> argv;
    argv.push_back("eqsc");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        const Sub* sub = nullptr;
        JobConfig cfg;
        for (const Sub* cand : {&c_coeff, &c_product, &c_table, &c_chev, &c_check}) {
            if (cand->app->parsed()) {
                sub = cand;
                cfg.command = cand->app->get_name();
            }
        }
        if (sub == nullptr) throw UsageError("a subcommand is required");
        if (sub->config->count() > 0) overlay_config_file(cfg, config_path);
        if (sub->group->count() > 0) cfg.group = cli.group;
        if (sub->parabolic->count() > 0) cfg.parabolic = cli.parabolic;
        if (sub->u->count() > 0) cfg.u = cli.u;
        if (sub->v->count() > 0) cfg.v = cli.v;
        if (sub->w->count() > 0) cfg.w = cli.w;
        if (sub->d->count() > 0) cfg.d = cli.d;
        if (sub->beta->count() > 0) cfg.beta = cli.beta;
        if (sub->format->count() > 0) cfg.format = cli.format;
        if (sub->noprune->count() > 0) cfg.prune = !no_prune_flag;
        if (sub->threads->count() > 0) cfg.threads = cli.threads;
        if (sub->oracle->count() > 0) cfg.oracle = cli.oracle;
        if (sub->max_weight->count() > 0) cfg.max_weight = cli.max_weight;
        if (cfg.threads < 1) throw UsageError("--threads must be at least 1");
        if (cfg.format != "text" && cfg.format != "json")
            throw UsageError("--format must be text or json");

        if (cfg.command == "coeff") {
            if (cfg.u.empty() || cfg.v.empty() || cfg.w.empty())
                throw UsageError("coeff needs --u, --v and --w");
            return run_coeff(cfg, out);
        }
        if (cfg.command == "product") {
            if (cfg.u.empty() || cfg.v.empty()) throw UsageError("product needs --u and --v");
            return run_product(cfg, out);
        }
        if (cfg.command == "table") return run_table(cfg, out);
        if (cfg.command == "chevalley") {
            if (cfg.beta == 0 || cfg.w.empty()) throw UsageError("chevalley needs --beta and --w");
            return run_chevalley(cfg, out);
        }
        return run_check(cfg, out);
    } catch (const InternalInconsistencyError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const ZeroRError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const SingularSystemError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const StratumNotReadyError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const DivisionByZeroError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace eqsc
