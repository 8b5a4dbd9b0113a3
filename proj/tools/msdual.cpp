#include "msdual/canonical.hpp"
#include "msdual/crystal.hpp"
#include "msdual/enumerate.hpp"
#include "msdual/hall.hpp"
#include "msdual/involution.hpp"
#include "msdual/quiverrep.hpp"
#include "msdual/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace msdual;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_multisegment(const Multisegment& m, bool as_json) {
    if (as_json)
        std::cout << m.to_json_string() << "\n";
    else
        std::cout << m.to_string() << "\n";
}

struct Args {
    std::string ring_spec = "z";
    std::string op;
    std::string format = "text";
    std::string input;
    std::string text;
    bool json = false;
    int residue = 0;
    int max_degree = 3;
    long long q = 2;
    unsigned long long seed = 1;
    std::string component = "empty";
    std::vector<long long> dims;
    std::string suite = "all";
    bool quick = false;
    std::string mu, a;
    int reduce_mod_n = 0;
    int verify_max_degree = 0, verify_max_dim = 0, verify_n = 0;
    std::string verify_ring;
    std::vector<std::string> extra;
    int res_lo = 0, res_hi = 0;
    bool window_set = false;
};

std::vector<long long> parse_csv(const std::string& text) {
    std::vector<long long> out;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    return out;
}

int cmd_dual(const Args& args) {
    VertexRing ring = VertexRing::parse(args.ring_spec);
    Multisegment m = Multisegment::parse(args.text, ring);
    Multisegment out(ring);
    if (args.op == "tau")
        out = tau(m);
    else if (args.op == "sharp")
        out = sharp(m);
    else if (args.op == "flat")
        out = m.flat();
    else if (args.op == "mw")
        out = mw_dual(m);
    else
        throw std::invalid_argument("dual --op must be tau|sharp|flat|mw");
    print_multisegment(out, args.json);
    return kExitOk;
}

int cmd_crystal_op(const Args& args) {
    VertexRing ring = VertexRing::parse(args.ring_spec);
    Multisegment m = Multisegment::parse(args.text, ring);
    if (args.op == "f") {
        print_multisegment(f_tilde(m, args.residue), args.json);
    } else if (args.op == "e") {
        auto r = e_tilde(m, args.residue);
        if (args.json) {
            nlohmann::json j;
            j["defined"] = r.has_value();
            if (r) j["result"] = nlohmann::json::parse(r->to_json_string());
            std::cout << j.dump() << "\n";
        } else {
            std::cout << (r ? r->to_string() : "undefined") << "\n";
        }
    } else if (args.op == "epsilon") {
        std::cout << epsilon(m, args.residue) << "\n";
    } else if (args.op == "strings") {
        nlohmann::json j = string_sums(m, args.residue);
        std::cout << j.dump() << "\n";
    } else if (args.op == "hw-path") {
        HighestWeightPath p = highest_weight_path(m);
        if (args.json) {
            nlohmann::json j;
            j["word"] = p.word;
            j["top"] = nlohmann::json::parse(p.top.to_json_string());
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "word:";
            for (int i : p.word) std::cout << " " << i;
            std::cout << "\ntop: " << p.top.to_string() << "\n";
        }
    } else {
        throw std::invalid_argument("crystal-op --op must be f|e|epsilon|strings|hw-path");
    }
    return kExitOk;
}

int cmd_graph(const Args& args) {
    VertexRing ring = VertexRing::parse(args.ring_spec);
    CrystalGraphOptions opt;
    opt.component_of_empty = args.component != "all";
    if (args.window_set) {
        opt.residue_lo = args.res_lo;
        opt.residue_hi = args.res_hi;
    }
    CrystalGraph g = crystal_graph(ring, args.max_degree, opt);
    if (args.format == "dot")
        std::cout << g.to_dot();
    else if (args.format == "json")
        std::cout << g.to_json_string() << "\n";
    else
        throw std::invalid_argument("graph --format must be dot|json");
    return kExitOk;
}

int cmd_canonical(const Args& args) {
    VertexRing ring = VertexRing::parse(args.ring_spec);
    if (!ring.is_cyclic() && args.dims.size() % 2 != 0)
        throw std::invalid_argument("over the integers pass --dim as residue,value pairs");
    DimVector d(ring);
    if (ring.is_cyclic()) {
        if (static_cast<int>(args.dims.size()) != ring.modulus())
            throw std::invalid_argument("--dim needs exactly n entries for zmod:n");
        for (std::size_t i = 0; i < args.dims.size(); ++i)
            d.add(static_cast<int>(i), args.dims[i]);
    } else {
        for (std::size_t i = 0; i + 1 < args.dims.size(); i += 2)
            d.add(static_cast<int>(args.dims[i]), args.dims[i + 1]);
    }
    CanonicalTable table = canonical_basis(ring, d);
    if (args.format == "json")
        std::cout << table.to_json_string() << "\n";
    else
        std::cout << table.to_text();
    return kExitOk;
}

int cmd_act(const Args& args) {
    VertexRing ring = VertexRing::parse(args.ring_spec);
    PBWVector u = PBWVector::from_json_string(read_input(args.input), ring);
    PBWVector out(u.ring());
    if (args.op == "f")
        out = f_action(args.residue, u);
    else if (args.op == "eprime")
        out = e_prime_action(args.residue, u);
    else
        throw std::invalid_argument("act --op must be f|eprime");
    std::cout << out.to_json_string() << "\n";
    return kExitOk;
}

int cmd_oracle(const Args& args) {
    VertexRing ring = VertexRing::parse(args.ring_spec);
    if (args.op == "hall-count") {
        if (args.extra.size() != 3)
            throw std::invalid_argument("oracle --op hall-count needs <Q> <P> <O>");
        Multisegment Q = Multisegment::parse(args.extra[0], ring);
        Multisegment P = Multisegment::parse(args.extra[1], ring);
        Multisegment O = Multisegment::parse(args.extra[2], ring);
        std::cout << count_submodules(Q, P, O, args.q) << "\n";
    } else if (args.op == "aut-count") {
        if (args.extra.size() != 1)
            throw std::invalid_argument("oracle --op aut-count needs <multisegment>");
        Multisegment m = Multisegment::parse(args.extra[0], ring);
        long long formula = aut_order(m, args.q);
        long long brute = count_automorphisms_brute(m, args.q);
        if (formula != brute)
            throw InvariantViolation("aut order formula disagrees with the brute count");
        std::cout << brute << "\n";
    } else if (args.op == "geom-dual") {
        if (args.extra.size() != 1)
            throw std::invalid_argument("oracle --op geom-dual needs <multisegment>");
        Multisegment m = Multisegment::parse(args.extra[0], ring);
        print_multisegment(generic_commutant_dual(m, args.seed), args.json);
    } else if (args.op == "classify") {
        NilpotentRep rep = NilpotentRep::from_json_string(read_input(args.input));
        print_multisegment(classify(rep), args.json);
    } else if (args.op == "realize") {
        if (args.extra.size() != 1)
            throw std::invalid_argument("oracle --op realize needs <multisegment>");
        Multisegment m = Multisegment::parse(args.extra[0], ring);
        std::optional<Fq> field;
        if (args.q > 0) field = Fq::make(args.q);
        std::cout << realize(m, field).to_json_string() << "\n";
    } else {
        throw std::invalid_argument(
            "oracle --op must be hall-count|aut-count|geom-dual|classify|realize");
    }
    return kExitOk;
}

int cmd_label(const Args& args) {
    VertexRing ring = VertexRing::parse(args.ring_spec);
    Label label;
    label.mu = parse_csv(args.mu);
    for (long long v : parse_csv(args.a)) label.a.push_back(static_cast<int>(v));
    Multisegment m = from_label(label, ring);
    if (args.reduce_mod_n >= 2) m = reduce_mod(m, args.reduce_mod_n);
    print_multisegment(m, args.json);
    return kExitOk;
}

int cmd_verify(const Args& args) {
    VerifyOptions opt;
    opt.quick = args.quick;
    opt.seed = args.seed;
    if (args.verify_max_degree > 0) opt.max_degree = args.verify_max_degree;
    if (args.verify_max_dim > 0) opt.max_dim = args.verify_max_dim;
    if (args.verify_n > 0) opt.modulus = args.verify_n;
    if (!args.verify_ring.empty()) opt.ring = args.verify_ring;
    std::vector<CheckResult> results = run_suite(args.suite, opt);
    bool all = true;
    for (auto& r : results) {
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << r.cases
                  << " cases, " << r.seconds << "s)";
        if (!r.pass) std::cerr << " :: " << r.detail;
        std::cerr << "\n";
        all = all && r.pass;
    }
    std::cout << report_json(results) << "\n";
    return all ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with multisegment dualities at roots of unity"};
    app.require_subcommand(1);
    Args args;

    auto add_ring = [&](CLI::App* cmd) {
        cmd->add_option("--ring", args.ring_spec, "vertex ring: z or zmod:N")->capture_default_str();
    };

    CLI::App* dual = app.add_subcommand("dual", "involutions tau, sharp, flat, mw");
    add_ring(dual);
    dual->add_option("--op", args.op, "tau|sharp|flat|mw")->required();
    dual->add_flag("--json", args.json, "JSON output");
    dual->add_option("multisegment", args.text, "e.g. \"2[0;2)+[1;3)\"")->required();

    CLI::App* cop = app.add_subcommand("crystal-op", "raising/lowering operators and paths");
    add_ring(cop);
    cop->add_option("--op", args.op, "f|e|epsilon|strings|hw-path")->required();
    cop->add_option("--i", args.residue, "residue")->capture_default_str();
    cop->add_flag("--json", args.json, "JSON output");
    cop->add_option("multisegment", args.text)->required();

    CLI::App* graph = app.add_subcommand("graph", "crystal graph generation and export");
    add_ring(graph);
    graph->add_option("--max-degree", args.max_degree)->capture_default_str();
    graph->add_option("--component", args.component, "empty|all")->capture_default_str();
    graph->add_option("--format", args.format, "dot|json")->capture_default_str();
    CLI::Option* lo = graph->add_option("--res-lo", args.res_lo, "residue window start (ring z)");
    CLI::Option* hi = graph->add_option("--res-hi", args.res_hi, "residue window end (ring z)");
    graph->callback([&args, lo, hi] { args.window_set = lo->count() > 0 || hi->count() > 0; });

    CLI::App* canon = app.add_subcommand("canonical", "distinguished basis tables");
    add_ring(canon);
    canon->add_option("--dim", args.text, "degree vector, e.g. 1,1 (zmod) or res,val,... (z)")
        ->required();
    canon->add_option("--format", args.format, "table|json")->capture_default_str();

    CLI::App* act = app.add_subcommand("act", "generator action on PBW vectors (JSON)");
    add_ring(act);
    act->add_option("--op", args.op, "f|eprime")->required();
    act->add_option("--i", args.residue, "residue")->required();
    act->add_option("--in", args.input, "input file ('-' = stdin)")->capture_default_str();

    CLI::App* oracle = app.add_subcommand("oracle", "brute-force counting and geometric duals");
    add_ring(oracle);
    oracle->add_option("--op", args.op, "hall-count|aut-count|geom-dual|classify|realize")
        ->required();
    oracle->add_option("--q", args.q, "finite field size (0 = rationals for realize)")
        ->capture_default_str();
    oracle->add_option("--in", args.input, "representation JSON for classify ('-' = stdin)")
        ->capture_default_str();
    oracle->add_option("--seed", args.seed, "sampling seed")->capture_default_str();
    oracle->add_flag("--json", args.json, "JSON output");
    oracle->add_option("args", args.extra, "multisegment arguments");

    CLI::App* label = app.add_subcommand("label", "multisegment from an induction label");
    add_ring(label);
    label->add_option("--mu", args.mu, "composition, e.g. 2,2,3")->required();
    label->add_option("--a", args.a, "origins, e.g. 2,2,0")->required();
    label->add_option("--mod", args.reduce_mod_n, "reduce modulo n afterwards");
    label->add_flag("--json", args.json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", args.suite, "involution|crystal|hall|canonical|geometry|mullineux|all")
        ->capture_default_str();
    verify->add_flag("--quick", args.quick, "reduced bounds");
    verify->add_option("--seed", args.seed)->capture_default_str();
    verify->add_option("--max-degree", args.verify_max_degree, "override degree sweeps");
    verify->add_option("--max-dim", args.verify_max_dim, "override dimension sweeps");
    verify->add_option("--n", args.verify_n, "restrict to one cyclic modulus");
    verify->add_option("--ring", args.verify_ring, "restrict ring families (z or zmod:N)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dual->parsed()) return cmd_dual(args);
        if (cop->parsed()) return cmd_crystal_op(args);
        if (graph->parsed()) return cmd_graph(args);
        if (canon->parsed()) {
            Args c = args;
            c.dims = parse_csv(args.text);
            return cmd_canonical(c);
        }
        if (act->parsed()) return cmd_act(args);
        if (oracle->parsed()) return cmd_oracle(args);
        if (label->parsed()) return cmd_label(args);
        if (verify->parsed()) return cmd_verify(args);
    } catch (const InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const GenericityNotReached& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ArithmeticOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        // Domain errors (syntax, aperiodicity, resource guards) are usage-level.
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
