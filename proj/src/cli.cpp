#include "wzw/cli.hpp"

#include "wzw/acceptance.hpp"
#include "wzw/errors.hpp"
#include "wzw/fock.hpp"
#include "wzw/kz.hpp"
#include "wzw/oracle.hpp"
#include "wzw/surface.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace wzw {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::int64_t parse_int(const std::string& s) {
    const std::string t = trim(s);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw Rejection("not an integer: '" + s + "'");
    }
    if (used != t.size()) throw Rejection("not an integer: '" + s + "'");
    return v;
}

Weight parse_weight(const RootSystem& rs, const std::string& s) {
    Weight w;
    for (const auto& part : split(s, ',')) w.push_back(parse_int(part));
    if (static_cast<int>(w.size()) != rs.rank())
        throw Rejection("weight '" + s + "' needs " + std::to_string(rs.rank()) + " coordinates for " + rs.name());
    return w;
}

// Labels are separated by ';'. For rank-one algebras ',' also separates them,
// so "1,1,0" is three A1 labels.
std::vector<DominantWeight> parse_labels(const RootSystem& rs, const std::string& s) {
    std::vector<DominantWeight> out;
    if (trim(s).empty()) return out;
    std::vector<std::string> parts = split(s, ';');
    if (rs.rank() == 1 && parts.size() == 1) parts = split(s, ',');
    for (const auto& p : parts) {
        auto w = parse_weight(rs, p);
        require_dominant(rs, w);
        out.emplace_back(std::move(w));
    }
    return out;
}

std::vector<int> a1_labels(const std::string& s) {
    std::vector<int> out;
    if (trim(s).empty()) return out;
    for (const auto& p : split(s, ',')) out.push_back(static_cast<int>(parse_int(p)));
    return out;
}

std::vector<Rational> parse_points(const std::string& s) {
    std::vector<Rational> out;
    if (trim(s).empty()) return out;
    for (const auto& p : split(s, ',')) out.push_back(parse_rational(trim(p)));
    return out;
}

void require_a1(const std::string& algebra) {
    if (RootSystem::parse(algebra).name() != "A1")
        throw Rejection("only A1 has representation matrices here, got " + algebra);
}

json weight_json(const Weight& w) { return json(w); }

std::string weight_text(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s;
}

// Prints a flat object either as JSON or as a header row and a value row.
void emit_flat(std::ostream& out, const json& obj, const std::string& format) {
    if (format == "json") {
        out << obj.dump(2) << "\n";
        return;
    }
    std::string head, row;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        head += (head.empty() ? "" : "\t") + it.key();
        row += (row.empty() && it == obj.begin() ? "" : "\t") +
               (it->is_string() ? it->get<std::string>() : it->dump());
    }
    out << head << "\n" << row << "\n";
}

json check_json(const CheckResult& c) {
    return {{"name", c.name}, {"window", c.window.to_string()}, {"residual_norm", to_string(c.residual_norm)}};
}

int emit_checks(std::ostream& out, const std::vector<CheckResult>& checks, const std::string& format) {
    bool ok = true;
    json arr = json::array();
    for (const auto& c : checks) {
        ok = ok && c.pass();
        arr.push_back(check_json(c));
    }
    if (format == "json") {
        out << json{{"checks", arr}}.dump(2) << "\n";
    } else {
        out << "name\twindow\tresidual_norm\n";
        for (const auto& c : checks) out << c.name << "\t" << c.window.to_string() << "\t" << to_string(c.residual_norm) << "\n";
    }
    return ok ? 0 : 2;
}

// ---------------------------------------------------------------------------

TrivalentGraph graph_from_json(const json& j) {
    auto slot = [](const json& s) { return Slot{s.at(0).get<int>(), s.at(1).get<int>()}; };
    TrivalentGraph g;
    g.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) g.edges.emplace_back(slot(e.at(0)), slot(e.at(1)));
    for (const auto& l : j.at("legs")) g.legs.push_back(slot(l));
    return g;
}

std::optional<TrivalentGraph> named_graph(const std::string& name, int genus, std::size_t legs) {
    if (name.empty()) return std::nullopt;
    if (name == "canonical") return canonical_graph(genus, legs);
    if (name == "theta") return theta_graph();
    if (name == "s") return four_holed_sphere(false);
    if (name == "t") return four_holed_sphere(true);
    throw Rejection("unknown graph '" + name + "' (canonical, theta, s, t)");
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Rejection("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Rejection(path + ": " + e.what());
    }
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Rejection("complex numbers are [re, im] pairs");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

// points[i] lists the positions of z_i at each waypoint.
KZPath path_from_json(const json& j) {
    const auto& pts = j.at("points");
    if (!pts.is_array() || pts.empty()) throw Rejection("path needs a nonempty 'points' array");
    const std::size_t waypoints = pts.at(0).size();
    KZPath p;
    p.closed = j.value("closed", false);
    p.waypoints.assign(waypoints, std::vector<Complex>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].size() != waypoints) throw Rejection("every z_i needs the same number of waypoints");
        for (std::size_t w = 0; w < waypoints; ++w) p.waypoints[w][i] = complex_from_json(pts[i][w]);
    }
    return p;
}

json rational_matrix(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"WZW conformal blocks: fusion, dimensions, twists, KZ and Sugawara checks", "wzw"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string algebra = "A1", format = "json", labels, label, points, graph, surface_file, path_file;
    int level = 1, genus = 0, degree = 6, kmax = 3;
    std::size_t steps = 10000;
    std::uint64_t seed = 20240229;
    std::vector<int> criteria;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    };

    auto* fusion = app.add_subcommand("fusion-table", "nonzero fusion coefficients N_{ijk}, i <= j <= k");
    fusion->add_option("--algebra", algebra)->required();
    fusion->add_option("--level", level)->required();
    add_format(fusion);

    auto* dim = app.add_subcommand("dim", "conformal-block dimension of a marked surface");
    dim->add_option("--algebra", algebra);
    dim->add_option("--level", level);
    dim->add_option("--genus", genus);
    dim->add_option("--labels", labels, "boundary labels, ';'-separated weights (',' also separates for A1)");
    dim->add_option("--graph", graph, "canonical, theta, s or t");
    dim->add_option("--surface", surface_file, "surface JSON; overrides the flags above");
    add_format(dim);

    auto* dehn = app.add_subcommand("dehn", "Dehn twist eigenvalue exp(-i pi r) on a boundary labelled mu");
    dehn->add_option("--algebra", algebra)->required();
    dehn->add_option("--level", level)->required();
    dehn->add_option("--label", label)->required();
    add_format(dehn);

    auto* oracle = app.add_subcommand("oracle", "brute-force coinvariant ranks (A1)");
    oracle->require_subcommand(1);
    auto* three = oracle->add_subcommand("three-point", "three-point block rank");
    three->add_option("--level", level)->required();
    three->add_option("--labels", labels)->required();
    add_format(three);
    auto* npoint = oracle->add_subcommand("npoint", "n-point block rank at given points");
    npoint->add_option("--level", level)->required();
    npoint->add_option("--labels", labels)->required();
    npoint->add_option("--points", points, "comma-separated rationals; default 0,1,2,...");
    add_format(npoint);

    auto* kz = app.add_subcommand("kz", "KZ connection on the coinvariants (A1)");
    kz->require_subcommand(1);
    auto* matrices = kz->add_subcommand("matrices", "A_ij = -c^(ij)/(l+h) with exact entries");
    matrices->add_option("--algebra", algebra);
    matrices->add_option("--level", level)->required();
    matrices->add_option("--labels", labels)->required();
    add_format(matrices);
    auto* transport = kz->add_subcommand("transport", "numerical parallel transport along a path");
    transport->add_option("--path", path_file)->required();
    transport->add_option("--steps", steps);
    transport->add_option("--level", level, "overrides the path file");
    transport->add_option("--labels", labels, "overrides the path file");

    auto* verify = app.add_subcommand("verify", "exact identity checks");
    verify->require_subcommand(1);
    auto* vir = verify->add_subcommand("virasoro", "[L_k, L_l] on the oscillator Fock space");
    vir->add_option("--kmax", kmax);
    vir->add_option("--degree", degree);
    add_format(vir);
    auto* sug = verify->add_subcommand("sugawara", "Sugawara derivation and L0 spectrum");
    sug->add_option("--algebra", algebra);
    sug->add_option("--level", level)->required();
    sug->add_option("--label", label)->required();
    sug->add_option("--degree", degree);
    add_format(sug);
    auto* all = verify->add_subcommand("all", "full acceptance suite");
    all->add_option("--seed", seed);
    all->add_option("--criteria", criteria, "run only these criteria");
    add_format(all);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (*fusion) {
            const auto rs = RootSystem::parse(algebra);
            const auto ring = fusion_table(alphabet(rs, level));
            const auto& ls = ring.alphabet().labels();
            if (format == "json") {
                json lab = json::array(), coeffs = json::array();
                for (const auto& l : ls) lab.push_back(weight_json(l.coords()));
                for (const auto& [ijk, n] : ring.nonzero_sorted())
                    coeffs.push_back({{"labels", {ijk[0], ijk[1], ijk[2]}}, {"n", n}});
                out << json{{"algebra", rs.name()}, {"level", level}, {"labels", lab}, {"coeffs", coeffs}}.dump(2)
                    << "\n";
            } else {
                out << "lambda\tmu\tnu\tn\n";
                for (const auto& [ijk, n] : ring.nonzero_sorted())
                    out << weight_text(ls[ijk[0]].coords()) << "\t" << weight_text(ls[ijk[1]].coords()) << "\t"
                        << weight_text(ls[ijk[2]].coords()) << "\t" << n << "\n";
            }
            return 0;
        }

        if (*dim) {
            std::optional<TrivalentGraph> g;
            MarkedSurface s;
            if (!surface_file.empty()) {
                const json j = read_json_file(surface_file);
                try {
                    algebra = j.at("algebra").get<std::string>();
                    level = j.at("level").get<int>();
                    s.genus = j.at("genus").get<int>();
                    const auto rs = RootSystem::parse(algebra);
                    for (const auto& w : j.value("boundary", json::array())) {
                        Weight wt = w.get<Weight>();
                        if (static_cast<int>(wt.size()) != rs.rank()) throw Rejection("boundary weight of wrong rank");
                        require_dominant(rs, wt);
                        s.labels.emplace_back(std::move(wt));
                    }
                    if (j.contains("graph")) g = graph_from_json(j.at("graph"));
                } catch (const json::exception& e) {
                    throw Rejection(surface_file + ": " + e.what());
                }
            } else {
                s.genus = genus;
                s.labels = parse_labels(RootSystem::parse(algebra), labels);
                g = named_graph(graph, genus, s.labels.size());
            }
            const auto ring = fusion_table(alphabet(RootSystem::parse(algebra), level));
            emit_flat(out, json{{"dimension", block_dimension(ring, s, g)}}, format);
            return 0;
        }

        if (*dehn) {
            const auto rs = RootSystem::parse(algebra);
            const auto a = alphabet(rs, level);
            auto w = parse_weight(rs, label);
            require_dominant(rs, w);
            const auto tw = dehn_twist_eigenvalue(a, DominantWeight(w));
            emit_flat(out, json{{"exponent", to_string(tw.exponent)}, {"eigenvalue", tw.to_string()}}, format);
            return 0;
        }

        if (*three) {
            const auto ls = a1_labels(labels);
            if (ls.size() != 3) throw Rejection("three-point needs exactly three labels");
            const auto r = three_point_rank(level, ls[0], ls[1], ls[2]);
            emit_flat(out, json{{"rank", r.rank}, {"classical_rank", r.classical_rank}}, format);
            return 0;
        }

        if (*npoint) {
            CoinvariantProblem p{level, a1_labels(labels), parse_points(points)};
            if (points.empty())
                for (std::size_t i = 0; i < p.labels.size(); ++i) p.points.emplace_back(static_cast<long>(i));
            const auto r = npoint_block_rank(p);
            emit_flat(out, json{{"rank", r.rank}, {"classical_rank", r.classical_rank}}, format);
            return 0;
        }

        if (*matrices) {
            require_a1(algebra);
            const auto s = kz_system(level, a1_labels(labels));
            if (auto bad = find_kohno_violation(s)) throw InvariantViolation("Kohno relation fails: " + *bad);
            if (format == "json") {
                json ms = json::array();
                for (const auto& [ij, m] : s.a)
                    ms.push_back({{"pair", {ij.first + 1, ij.second + 1}}, {"entries", rational_matrix(m)}});
                out << json{{"algebra", "A1"},
                            {"level", level},
                            {"labels", s.labels},
                            {"dim", s.dim()},
                            {"matrices", ms}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& [ij, m] : s.a) {
                    out << "# A_" << ij.first + 1 << ij.second + 1 << "\n";
                    for (std::size_t r = 0; r < m.rows(); ++r) {
                        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "\t" : "") << to_string(m(r, c));
                        out << "\n";
                    }
                }
            }
            return 0;
        }

        if (*transport) {
            const json j = read_json_file(path_file);
            KZPath path;
            std::vector<int> ls;
            try {
                path = path_from_json(j);
                if (!transport->count("--level")) level = j.at("level").get<int>();
                if (!transport->count("--labels")) ls = j.at("labels").get<std::vector<int>>();
                if (j.contains("algebra")) require_a1(j.at("algebra").get<std::string>());
            } catch (const json::exception& e) {
                throw Rejection(path_file + ": " + e.what());
            }
            if (transport->count("--labels")) ls = a1_labels(labels);
            const auto s = kz_system(level, ls);
            const auto r = parallel_transport(s, path, steps);
            json m = json::array();
            for (const auto& row : r.matrix) {
                json jr = json::array();
                for (const auto& x : row) jr.push_back({x.real(), x.imag()});
                m.push_back(jr);
            }
            out << json{{"dim", s.dim()},
                        {"steps", r.steps},
                        {"error_estimate", r.error_estimate},
                        {"converged", r.converged},
                        {"matrix", m}}
                       .dump(2)
                << "\n";
            return 0;
        }

        if (*vir) return emit_checks(out, check_virasoro_suite(kmax, degree), format);

        if (*sug) {
            require_a1(algebra);
            InducedModule m(level, static_cast<int>(parse_int(label)), degree);
            auto checks = check_sugawara_derivation(m, 2);
            for (auto& c : check_sugawara_bracket(m, 2)) checks.push_back(std::move(c));
            for (auto& c : check_l0_spectrum(IntegrableQuotient(m))) checks.push_back(std::move(c));
            return emit_checks(out, checks, format);
        }

        if (*all) {
            const auto reports = run_acceptance(criteria, seed);
            bool ok = true;
            json arr = json::array();
            for (const auto& r : reports) {
                ok = ok && r.status != Status::fail;
                arr.push_back({{"id", r.id},
                               {"title", r.title},
                               {"status", to_string(r.status)},
                               {"cases", r.cases},
                               {"detail", r.detail}});
            }
            if (format == "json") {
                out << json{{"criteria", arr}, {"seed", seed}}.dump(2) << "\n";
            } else {
                out << "id\tstatus\tcases\ttitle\tdetail\n";
                for (const auto& r : reports)
                    out << r.id << "\t" << to_string(r.status) << "\t" << r.cases << "\t" << r.title << "\t" << r.detail
                        << "\n";
            }
            return ok ? 0 : 2;
        }
    } catch (const Rejection& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    err << app.help();
    return 1;
}

}  // namespace wzw
