#include "tamefiber/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "tamefiber/catalog.hpp"
#include "tamefiber/errors.hpp"
#include "tamefiber/fiber.hpp"
#include "tamefiber/jumps.hpp"
#include "tamefiber/resolution.hpp"
#include "tamefiber/singtrace.hpp"

namespace tamefiber {

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string rat(const BigRat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

struct GraphSource {
    std::string graph_path;
    std::string catalog_id;

    FiberGraph load() const {
        if (graph_path.empty() == catalog_id.empty()) throw Usage("give exactly one of --graph or --catalog");
        return graph_path.empty() ? lookup(catalog_id) : load_graph(graph_path);
    }
};

void print_coeffs(std::ostream& out, const GroupRingElement& t) {
    for (const auto& [e, c] : t.terms()) out << "coeff " << e << " " << c.get_str() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of tame cyclic quotient singularities and degenerating curves", "tamefiber"};
    app.require_subcommand(1);

    bool machine = false;
    std::int64_t m1 = 0, m2 = 0, n = 0;
    std::int64_t n_min = 1000;
    int sweeps = 3;
    std::optional<std::int64_t> cross;
    GraphSource src;

    auto add_triple = [&](CLI::App* sub) {
        sub->add_option("m1", m1, "multiplicity of the first branch")->required();
        sub->add_option("m2", m2, "multiplicity of the second branch")->required();
        sub->add_option("n", n, "degree of the extension")->required();
        sub->add_flag("--machine", machine, "emit only machine-readable lines");
    };
    auto add_graph = [&](CLI::App* sub, bool needs_n) {
        sub->add_option("--graph", src.graph_path, "fiber graph file");
        sub->add_option("--catalog", src.catalog_id, "built-in fiber type, e.g. kodaira:IV");
        if (needs_n) sub->add_option("--n", n, "degree of the extension")->required();
        sub->add_flag("--machine", machine, "emit only machine-readable lines");
    };

    auto* resolve_cmd = app.add_subcommand("resolve", "resolution data of (m1, m2, n)");
    add_triple(resolve_cmd);
    auto* trace_sing_cmd = app.add_subcommand("trace-sing", "trace polynomial of (m1, m2, n)");
    add_triple(trace_sing_cmd);
    auto* trace_fiber_cmd = app.add_subcommand("trace-fiber", "total trace of a fiber graph");
    add_graph(trace_fiber_cmd, true);
    auto* character_cmd = app.add_subcommand("character", "characters on H^1 of the special fiber");
    add_graph(character_cmd, true);
    auto* jumps_cmd = app.add_subcommand("jumps", "jumps of the filtration");
    add_graph(jumps_cmd, false);
    jumps_cmd->add_option("--n-min", n_min, "lower bound for the sweep degrees");
    jumps_cmd->add_option("--sweeps", sweeps, "number of degrees that must agree");
    jumps_cmd->add_option("--cross-residue", cross, "also sweep this residue class mod lcm");
    auto* list_cmd = app.add_subcommand("catalog-list", "built-in fiber types");
    list_cmd->add_flag("--machine", machine, "emit only machine-readable lines");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    std::ostringstream buf;
    try {
        if (resolve_cmd->parsed()) {
            const ResolutionData res = resolve({m1, m2, n});
            const NodeEigenData eig = node_eigen_data(res);
            std::vector<std::int64_t> z, w;
            for (const auto& node : eig.nodes) {
                z.push_back(node.z_exponent);
                w.push_back(node.w_exponent);
            }
            if (!machine) {
                buf << "singularity (" << m1 << "," << m2 << "," << n << ")\n";
                buf << "r=" << res.r << "\n";
                buf << "b=[" << join(res.jh.b, ",") << "]\n";
                buf << "mu=[" << join(res.mu, ",") << "]\n";
                buf << "L=" << res.length() << " alpha1=" << res.alpha1 << " alpha2=" << res.alpha2 << " m=" << res.m
                    << " M=" << res.M << " stable=" << (is_stable(res) ? "yes" : "no") << "\n";
            } else {
                buf << "r " << res.r << "\n";
                buf << "b " << join(res.jh.b, " ") << "\n";
                buf << "mu " << join(res.mu, " ") << "\n";
                buf << "L " << res.length() << "\n";
                buf << "alpha1 " << res.alpha1 << "\n";
                buf << "alpha2 " << res.alpha2 << "\n";
                buf << "stable " << (is_stable(res) ? 1 : 0) << "\n";
                buf << "zexp " << join(z, " ") << "\n";
                buf << "wexp " << join(w, " ") << "\n";
            }
        } else if (trace_sing_cmd->parsed()) {
            const ResolutionData res = resolve({m1, m2, n});
            const GroupRingElement t = trace_polynomial(res);
            if (!machine) {
                buf << "Tr(" << m1 << "," << m2 << "," << n << ") = " << t.to_string("x") << "\n";
                if (is_stable(res)) {
                    buf << "closed form " << (trace_closed_form(res) == t ? "agrees" : "DISAGREES") << "\n";
                } else {
                    buf << "chain not stable; closed form not applicable\n";
                }
            }
            print_coeffs(buf, t);
        } else if (trace_fiber_cmd->parsed()) {
            const FiberGraph g = src.load();
            const auto c2 = self_intersections(g, n);
            const GroupRingElement t = total_trace(g, n);
            if (!machine) {
                buf << "vertex  genus  mult  C^2\n";
                for (const auto& [id, c] : c2) {
                    const auto& v = g.vertices()[g.index_of(id)];
                    buf << id << "  " << v.genus << "  " << v.mult << "  " << c << "\n";
                }
                buf << "total trace = " << t.to_string("x") << "\n";
            }
            for (const auto& [id, c] : c2) buf << "selfint " << id << " " << c << "\n";
            print_coeffs(buf, t);
        } else if (character_cmd->parsed()) {
            const FiberGraph g = src.load();
            const CharacterMultiset ch = h1_character(g, n);
            if (!machine) buf << "H^1 characters at n=" << n << " (xi -> xi^e, multiplicity)\n";
            for (const auto& [e, c] : ch.exponents) buf << "char " << e << " " << c << "\n";
            buf << "genus " << ch.total << "\n";
        } else if (jumps_cmd->parsed()) {
            const FiberGraph g = src.load();
            JumpOptions opt;
            opt.n_min = n_min;
            opt.sweeps = sweeps;
            opt.cross_check_residue = cross;
            const JumpSet js = compute_jumps(g, opt);
            if (!machine) buf << "degrees used: " << join(js.witnesses, ", ") << "\n";
            buf << "ntilde " << js.n_tilde << "\n";
            for (const auto& j : js.jumps) buf << "jump " << rat(j) << "\n";
        } else if (list_cmd->parsed()) {
            for (const auto& e : catalog_list()) {
                buf << e.id;
                if (!machine) buf << "  " << e.description;
                buf << "\n";
            }
        }
    } catch (const Usage& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    out << buf.str();
    return 0;
}

}  // namespace tamefiber
