#include "bgm/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bgm/betti.hpp"
#include "bgm/boundary.hpp"
#include "bgm/counts.hpp"
#include "bgm/io.hpp"
#include "bgm/oracles.hpp"

namespace bgm {

namespace {

using json = nlohmann::ordered_json;

struct file_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    long long field = 65521;
    bool field_given = false;
    std::vector<int> window;
    bool closed_deaths = false;
    std::uint64_t seed = 0;
    int cap = 1024;
    std::string svg;
    int degree = 0;
    int gens = 3, rels = 3;
    std::string input;

    Field prime() const {
        if (field < 2 || field >= (1LL << 31) || !is_prime(std::uint64_t(field)))
            throw field_error("--field " + std::to_string(field) + " is not a prime below 2^31");
        return Field(elem(field));
    }
    std::optional<Window> win() const {
        if (window.empty()) return std::nullopt;
        return Window{{window[0], window[1]}, {window[2], window[3]}};
    }
    DecompOptions decomp() const {
        DecompOptions o;
        o.seed = seed;
        o.cap = cap;
        return o;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw file_error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

GridModule load(const JobConfig& cfg) {
    if (cfg.input.empty()) throw usage_error("an input file is required");
    std::string text = read_file(cfg.input);
    Field F = cfg.prime();
    switch (detect_input(text)) {
        case InputKind::presentation: {
            Presentation pr = parse_presentation(text);
            if (cfg.field_given && pr.F.p != F.p) throw field_error("--field disagrees with the file header");
            Window w = cfg.win() ? *cfg.win() : support_window(pr);
            return evaluate_presentation(pr, w);
        }
        case InputKind::module: {
            GridModule M = parse_module(text, F);
            if (cfg.field_given && M.F.p != F.p) throw field_error("--field disagrees with the file header");
            return M;
        }
        case InputKind::bifiltration: {
            Bifiltration bf = parse_bifiltration(text);
            Window w;
            if (cfg.win()) {
                w = *cfg.win();
            } else {
                std::set<Bigrade> g;
                for (const auto& s : bf.simplices) g.insert(s.grade);
                w = bounding(g);
            }
            return homology_module(F, bf, cfg.degree, w);
        }
    }
    throw internal_error("unreachable input kind");
}

json grade_json(Bigrade p) { return json::array({p.x, p.y}); }

json curves_json(const CurveMultiset& cs) {
    json a = json::array();
    for (const Curve& c : cs) {
        json pts = json::array();
        for (auto p : c) pts.push_back(grade_json(p));
        a.push_back(pts);
    }
    return a;
}

json grades_json(const std::vector<Bigrade>& g) {
    json a = json::array();
    for (auto p : g) a.push_back(grade_json(p));
    return a;
}

json component_json(const Field& F, const BoundaryComponent& c) {
    json j;
    j["curve"] = grades_json(c.curve);
    json m = json::array(), t = json::array();
    for (const Poly& f : c.monodromy) {
        m.push_back(f);
        t.push_back(poly::to_string(F, f));
    }
    j["monodromy"] = m;
    j["monodromy_text"] = t;
    return j;
}

void write_svg(const std::string& path, const std::string& svg) {
    std::ofstream o(path);
    if (!o) throw file_error("cannot write '" + path + "'");
    o << svg;
}

int cmd_count(const JobConfig& cfg, json& out) {
    GridModule M = load(cfg);
    int a = n2(M), b = n_bth(M, cfg.decomp()), c = n_dth(M, cfg.decomp());
    out["n2"] = a;
    out["n_bth"] = b;
    out["n_dth"] = c;
    return a == b && b == c ? exit_code::ok : exit_code::check_failed;
}

int cmd_curves(const JobConfig& cfg, json& out) {
    GridModule M = load(cfg);
    CurveMultiset b = births(M, cfg.decomp()), d = deaths(M, cfg.decomp());
    if (cfg.closed_deaths) d = shift_curves(d, -EXY);
    out["births"] = curves_json(b);
    out["deaths"] = curves_json(d);
    out["deaths_convention"] = cfg.closed_deaths ? "closed" : "open";
    int n = n2(M);
    return int(b.size()) == n && int(d.size()) == n ? exit_code::ok : exit_code::check_failed;
}

int cmd_betti(const JobConfig& cfg, json& out) {
    GridModule M = load(cfg);
    BettiTables k = koszul_betti(M);
    bool agree = betti_from_curves(M, cfg.decomp()) == k;
    out["b0"] = grades_json(k.b0);
    out["b1"] = grades_json(k.b1);
    out["b2"] = grades_json(k.b2);
    out["curves_agree"] = agree;
    return agree ? exit_code::ok : exit_code::check_failed;
}

int cmd_boundary(const JobConfig& cfg, json& out) {
    GridModule M = load(cfg);
    auto comps = boundary_components(M, cfg.decomp());
    json a = json::array();
    for (const auto& c : comps) a.push_back(component_json(M.F, c));
    out["components"] = a;
    if (!cfg.svg.empty()) {
        write_svg(cfg.svg, render_svg(M, comps, cfg.decomp()));
        out["svg"] = cfg.svg;
    }
    return exit_code::ok;
}

int cmd_decompose(const JobConfig& cfg, json& out) {
    GridModule M = load(cfg);
    GridSummands s = decompose_grid(M, cfg.decomp());
    json a = json::array();
    bool spread = true;
    for (const GridModule& S : s.modules) {
        json j;
        auto supp = S.support();
        j["support"] = grades_json(std::vector<Bigrade>(supp.begin(), supp.end()));
        json dims = json::array();
        bool thin = true;
        for (auto p : S.w.points())
            if (S.dim(p)) {
                dims.push_back(json::array({p.x, p.y, S.dim(p)}));
                thin = thin && S.dim(p) == 1;
            }
        j["dims"] = dims;
        j["spread"] = thin && is_spread(supp);
        spread = spread && j["spread"].get<bool>();
        a.push_back(j);
    }
    out["summands"] = a;
    out["spread_decomposable"] = spread;
    GridModule sum(M.F, M.w);
    for (const GridModule& S : s.modules) sum = direct_sum(sum, extend(S, M.w));
    bool ok = same_dims_and_ranks(sum, M);
    out["reassembly_matches"] = ok;
    return ok ? exit_code::ok : exit_code::check_failed;
}

int cmd_check(const JobConfig& cfg, json& out) {
    GridModule M;
    if (cfg.input.empty()) {
        Window w = cfg.win() ? *cfg.win() : Window{{0, 0}, {2, 2}};
        std::mt19937_64 rng(cfg.seed);
        int g = 1 + int(rng() % 3), r = int(rng() % 4);
        M = evaluate_presentation(random_presentation(cfg.prime(), g, r, w, cfg.seed), w);
    } else {
        M = load(cfg);
    }
    json c;
    c["n2"] = n2(M);
    c["n_bth"] = n_bth(M, cfg.decomp());
    c["n_dth"] = n_dth(M, cfg.decomp());
    c["n_incl_excl"] = n_incl_excl(M);
    c["gpd"] = count_gpd(M);
    c["signed_barcode"] = count_signed_barcode(M);
    c["hooks"] = count_hooks(M);
    c["int_euler"] = count_int_euler(M);
    long long hil = count_hilbert(M);
    bool equal = true;
    for (auto& [k, v] : c.items()) equal = equal && v.get<long long>() == c["n2"].get<long long>();
    c["hilbert"] = hil;
    bool hil_ok = M.w.empty() ? hil == 0 : hil == M.dim(M.w.hi);
    out["counts"] = c;
    out["equal"] = equal;
    out["hilbert_is_top_dim"] = hil_ok;
    return equal && hil_ok ? exit_code::ok : exit_code::check_failed;
}

int cmd_gen(const JobConfig& cfg, std::ostream& os) {
    Window w = cfg.win() ? *cfg.win() : Window{{0, 0}, {3, 3}};
    if (cfg.gens < 0 || cfg.rels < 0) throw usage_error("--gens and --rels must be non-negative");
    os << serialize_presentation(random_presentation(cfg.prime(), cfg.gens, cfg.rels, w, cfg.seed));
    return exit_code::ok;
}

int cmd_plot(const JobConfig& cfg, json& out) {
    if (cfg.svg.empty()) throw usage_error("plot needs --svg <path>");
    GridModule M = load(cfg);
    auto comps = boundary_components(M, cfg.decomp());
    write_svg(cfg.svg, render_svg(M, comps, cfg.decomp()));
    out["svg"] = cfg.svg;
    out["components"] = comps.size();
    return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bigraded module invariants"};
    app.require_subcommand(1);
    JobConfig cfg;
    if (const char* c = std::getenv("BGM_CAP")) {
        try {
            cfg.cap = std::stoi(c);
        } catch (const std::exception&) {
            err << "bgm: error: BGM_CAP is not an integer\n";
            return exit_code::usage;
        }
    }
    auto* field = app.add_option("--field", cfg.field, "prime field size");
    app.add_option("--window", cfg.window, "x0 y0 x1 y1")->expected(4);
    app.add_flag("--closed-deaths", cfg.closed_deaths, "report death curves in the closed convention");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--cap", cfg.cap, "maximal total dimension for decompositions (default $BGM_CAP or 1024)");
    app.add_option("--svg", cfg.svg, "SVG output path");
    app.add_option("--degree", cfg.degree, "homological degree for bifiltration input");
    app.add_option("--gens", cfg.gens, "generators for gen");
    app.add_option("--rels", cfg.rels, "relations for gen");

    std::vector<std::pair<std::string, std::string>> cmds{
        {"count", "n2, n_bth and n_dth"},
        {"curves", "birth and death curves"},
        {"betti", "Betti tables, checked against the curves"},
        {"boundary", "boundary components"},
        {"decompose", "indecomposable summands"},
        {"check", "oracle count equalities (random module without input)"},
        {"gen", "random presentation file"},
        {"plot", "SVG of curves, corners and boundary"},
    };
    std::map<std::string, CLI::App*> sub;
    for (auto& [name, help] : cmds) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        if (name != "gen") s->add_option("input", cfg.input, "input file");
        sub[name] = s;
    }

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return exit_code::ok;
        }
        err << "bgm: usage error: " << e.what() << "\n";
        return exit_code::usage;
    }
    cfg.field_given = field->count() > 0;

    try {
        if (cfg.cap <= 0) throw usage_error("--cap must be positive");
        if (cfg.degree < 0) throw usage_error("--degree must be non-negative");
        if (sub["gen"]->parsed()) return cmd_gen(cfg, out);
        json j;
        int rc = exit_code::ok;
        if (sub["count"]->parsed()) rc = cmd_count(cfg, j);
        else if (sub["curves"]->parsed()) rc = cmd_curves(cfg, j);
        else if (sub["betti"]->parsed()) rc = cmd_betti(cfg, j);
        else if (sub["boundary"]->parsed()) rc = cmd_boundary(cfg, j);
        else if (sub["decompose"]->parsed()) rc = cmd_decompose(cfg, j);
        else if (sub["check"]->parsed()) rc = cmd_check(cfg, j);
        else if (sub["plot"]->parsed()) rc = cmd_plot(cfg, j);
        out << j.dump() << "\n";
        if (rc == exit_code::check_failed) err << "bgm: an invariant check failed\n";
        return rc;
    } catch (const usage_error& e) {
        err << "bgm: usage error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const file_error& e) {
        err << "bgm: file error: " << e.what() << "\n";
        return exit_code::file;
    } catch (const syntax_error& e) {
        err << "bgm: syntax error: " << e.what() << "\n";
        return exit_code::syntax;
    } catch (const field_error& e) {
        err << "bgm: field error: " << e.what() << "\n";
        return exit_code::field;
    } catch (const field_too_small& e) {
        err << "bgm: field error: " << e.what() << "\n";
        return exit_code::field;
    } catch (const cap_exceeded& e) {
        err << "bgm: size error: " << e.what() << "\n";
        return exit_code::size;
    } catch (const size_limit& e) {
        err << "bgm: size error: " << e.what() << "\n";
        return exit_code::size;
    } catch (const grade_error& e) {
        err << "bgm: invalid input: " << e.what() << "\n";
        return exit_code::invalid_input;
    } catch (const invalid_presentation& e) {
        err << "bgm: invalid input: " << e.what() << "\n";
        return exit_code::invalid_input;
    } catch (const contract_error& e) {
        err << "bgm: invalid input: " << e.what() << "\n";
        return exit_code::invalid_input;
    } catch (const precondition_error& e) {
        err << "bgm: invalid input: " << e.what() << "\n";
        return exit_code::invalid_input;
    } catch (const std::exception& e) {
        err << "bgm: internal error: " << e.what() << "\n";
        return exit_code::internal;
    }
}

}  // namespace bgm
