#include "tropext/cli.hpp"

#include <fstream>
#include <functional>

#include <CLI11.hpp>

#include "tropext/json_io.hpp"
#include "tropext/svg.hpp"

namespace tropext::cli {

namespace {

using io::json;

struct Options {
    std::string field;
    std::uint64_t seed = kDefaultSeed;
    std::size_t budget = kDefaultBudget;
    std::string out;
    std::string window;
    std::string input;
    std::string second_input;
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> arrows;
    std::size_t node = 0;
    std::string function;
    std::string extension = "A1";
    std::size_t samples = 10;
    bool dual = false;
    bool as_given = false;
};

std::optional<FieldConfig> field_flag(const Options& o)
{
    if (o.field.empty())
        return std::nullopt;
    try {
        return FieldConfig::parse(o.field);
    } catch (const std::invalid_argument& e) {
        throw ParseError("--field", e.what());
    }
}

Cone decode_cone(const json& j, const std::string& path)
{
    if (!j.is_object() || !j.contains("rank") || !j.contains("generators"))
        throw ParseError(path, "expected {\"rank\", \"generators\"}");
    if (!j["rank"].is_number_unsigned())
        throw ParseError(path + ".rank", "expected a nonnegative integer");
    auto rank = j["rank"].get<std::size_t>();
    auto gens = io::decode_intmatrix(j["generators"], path + ".generators");
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].size() != rank)
            throw ParseError(path + ".generators[" + std::to_string(i) + "]", "length differs from rank");
    return Cone(rank, std::move(gens));
}

json cone_json(const Cone& c)
{
    return {{"rank", c.ambient_rank()}, {"generators", io::encode(IntMatrix(c.generators()))}};
}

const json& member(const json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        throw ParseError(path, "expected an object");
    if (!j.contains(key))
        throw ParseError(path + "." + key, "missing field");
    return j[key];
}

/// A torus-point list or an extended point on `fan`.
ExtendedPoint decode_any_point(const json& j, const FanPtr& fan, const std::string& path)
{
    if (j.is_array()) {
        auto v = io::decode_qvec(j, path);
        if (v.size() != fan->rank())
            throw ParseError(path, "length differs from the rank " + std::to_string(fan->rank()));
        return ExtendedPoint::torus_point(fan, std::move(v));
    }
    return io::decode_point(j, fan, path);
}

std::vector<LaurentPoly> decode_gens(const json& j, const std::optional<FieldConfig>& field, const std::string& path)
{
    if (!j.is_array())
        throw ParseError(path, "expected an array");
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(io::decode_poly(j[i], field, path + "[" + std::to_string(i) + "]"));
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].nvars() != out[0].nvars() || !(out[i].field() == out[0].field()))
            throw ParseError(path + "[" + std::to_string(i) + "]", "generators disagree on rank or field");
    return out;
}

EmbeddingSystem load_system(const Options& o)
{
    auto s = io::decode_system(io::load_file(o.input), o.input + ":$");
    if (auto f = field_flag(o); f && !(*f == s.field()))
        throw DomainError("--field " + f->str() + " disagrees with the system field " + s.field().str());
    return s;
}

json inline_or_file(const std::string& arg, const std::string& flag)
{
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return io::parse_text(arg, flag);
    return io::load_file(arg);
}

ExtensionFan extension_flag(const std::string& text)
{
    if (text == "A1")
        return ExtensionFan::Affine;
    if (text == "P1")
        return ExtensionFan::Projective;
    throw ParseError("--extension", "expected A1 or P1");
}

json with_system(json result, const EmbeddingSystem& s)
{
    return {{"result", std::move(result)}, {"system", io::encode(s)}};
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Extended tropicalizations over nonarchimedean fields, with exact arithmetic.", "tropext"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    std::function<std::string()> action;

    app.add_option("--field", o.field, "trivial | padic:<p> | tadic (default: taken from the input)");
    app.add_option("--seed", o.seed, "seed for randomized searches")->capture_default_str();
    app.add_option("--budget", o.budget, "number of candidate functions for separation")->capture_default_str();
    app.add_option("--out", o.out, "write the artifact here instead of standard output");
    app.add_option("--svg-window", o.window, "clipping box xmin,ymin,xmax,ymax (default -5,-5,5,5)");

    auto leaf = [&](CLI::App* parent, const char* name, const char* help) {
        auto* c = parent->add_subcommand(name, help);
        c->fallthrough();
        return c;
    };

    auto* fan = app.add_subcommand("fan", "fans and cones")->require_subcommand(1)->fallthrough();
    auto* trop = app.add_subcommand("trop", "tropical hypersurfaces, evaluation, membership, maps")
                     ->require_subcommand(1)
                     ->fallthrough();
    auto* sys = app.add_subcommand("system", "embedding systems")->require_subcommand(1)->fallthrough();
    auto* render = app.add_subcommand("render", "drawings of 2-D complexes")->require_subcommand(1)->fallthrough();

    auto* validate = leaf(fan, "validate", "check face closure and pairwise intersections");
    validate->add_option("fan", o.input, "fan JSON")->required();
    validate->add_flag("--as-given", o.as_given, "check the cone list without adding missing faces");
    validate->callback([&] {
        action = [&] {
            auto f = io::decode_fan(io::load_file(o.input), o.input + ":$", !o.as_given, false);
            return io::dump(io::encode(fan_validate(f), f));
        };
    });

    auto* dual = leaf(fan, "dual", "dual cone");
    dual->add_option("cone", o.input, "cone JSON {rank, generators}")->required();
    dual->callback([&] {
        action = [&] { return io::dump(cone_json(dual_cone(decode_cone(io::load_file(o.input), o.input + ":$")))); };
    });

    auto* hilbert = leaf(fan, "hilbert", "Hilbert basis of the lattice points of a cone");
    hilbert->add_option("cone", o.input, "cone JSON {rank, generators}")->required();
    hilbert->add_flag("--dual", o.dual, "use the dual cone (the monoid S_sigma)");
    hilbert->callback([&] {
        action = [&] {
            Cone c = decode_cone(io::load_file(o.input), o.input + ":$");
            if (o.dual)
                c = dual_cone(c);
            return io::dump({{"rank", c.ambient_rank()}, {"basis", io::encode(IntMatrix(hilbert_basis(c)))}});
        };
    });

    auto* hyp = leaf(trop, "hyp", "tropical hypersurface of a Laurent polynomial");
    hyp->add_option("poly", o.input, "polynomial JSON")->required();
    hyp->callback([&] {
        action = [&] {
            auto p = io::decode_poly(io::load_file(o.input), field_flag(o), o.input + ":$");
            return io::dump(io::encode(trop_hypersurface(p)));
        };
    });

    auto* eval = leaf(trop, "eval", "tropical evaluation at a point");
    eval->add_option("input", o.input, "{poly, point[, fan, chart]}")->required();
    eval->callback([&] {
        action = [&] {
            auto j = io::load_file(o.input);
            std::string path = o.input + ":$";
            auto p = io::decode_poly(member(j, "poly", path), field_flag(o), path + ".poly");
            auto tp = tropicalize_poly(p);
            FanPtr f = j.contains("fan") ? make_fan(io::decode_fan(j["fan"], path + ".fan"))
                                         : make_fan(Fan::torus(p.nvars()));
            if (f->rank() != p.nvars())
                throw ParseError(path + ".fan", "rank differs from the number of variables");
            auto pt = decode_any_point(member(j, "point", path), f, path + ".point");
            std::size_t chart = pt.stratum();
            if (j.contains("chart")) {
                if (!j["chart"].is_number_unsigned() || j["chart"].get<std::size_t>() >= f->size())
                    throw ParseError(path + ".chart", "expected a cone index of the fan");
                chart = j["chart"].get<std::size_t>();
            }
            auto r = trop_eval(tp, pt, chart);
            return io::dump({{"min", io::encode(r.min)},
                             {"argmin_count", r.argmin_count},
                             {"min_attained_twice", membership_min_twice(tp, pt, chart)}});
        };
    });

    auto* mem = leaf(trop, "member", "membership of an extended point in trop(V(gens))");
    mem->add_option("input", o.input, "{gens, point[, fan, basis, chart]}")->required();
    mem->callback([&] {
        action = [&] {
            auto j = io::load_file(o.input);
            std::string path = o.input + ":$";
            auto gens = decode_gens(member(j, "gens", path), field_flag(o), path + ".gens");
            if (gens.empty())
                throw ParseError(path + ".gens", "need at least one generator");
            FanPtr f = j.contains("fan") ? make_fan(io::decode_fan(j["fan"], path + ".fan"))
                                         : make_fan(Fan::torus(gens[0].nvars()));
            if (f->rank() != gens[0].nvars())
                throw ParseError(path + ".fan", "rank differs from the number of variables");
            auto pt = decode_any_point(member(j, "point", path), f, path + ".point");
            BasisFlag flag = gens.size() == 1 ? BasisFlag::Asserted : BasisFlag::Unknown;
            if (j.contains("basis")) {
                auto b = j["basis"];
                if (b == "asserted")
                    flag = BasisFlag::Asserted;
                else if (b == "unknown")
                    flag = BasisFlag::Unknown;
                else
                    throw ParseError(path + ".basis", "expected \"asserted\" or \"unknown\"");
            }
            std::optional<std::size_t> chart;
            if (j.contains("chart")) {
                if (!j["chart"].is_number_unsigned() || j["chart"].get<std::size_t>() >= f->size())
                    throw ParseError(path + ".chart", "expected a cone index of the fan");
                chart = j["chart"].get<std::size_t>();
            }
            auto m = extended_membership(gens, pt, flag, chart);
            return io::dump({{"membership", to_string(m)}, {"basis", to_string(flag)}, {"point", io::encode(pt)}});
        };
    });

    auto* map = leaf(trop, "map", "apply a tropical toric map to extended points");
    map->add_option("input", o.input, "{source, target, map: {matrix, shift}, points}")->required();
    map->callback([&] {
        action = [&] {
            auto j = io::load_file(o.input);
            std::string path = o.input + ":$";
            auto src = make_fan(io::decode_fan(member(j, "source", path), path + ".source"));
            auto tgt = make_fan(io::decode_fan(member(j, "target", path), path + ".target"));
            auto m = io::decode_trop_map(member(j, "map", path), src, tgt, path + ".map");
            const auto& pts = member(j, "points", path);
            if (!pts.is_array())
                throw ParseError(path + ".points", "expected an array");
            json images = json::array();
            bool agree = true;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                auto p = decode_any_point(pts[i], src, path + ".points[" + std::to_string(i) + "]");
                auto img = trop_map_apply(m, p);
                agree = agree && trop_map_apply_dual(m, p) == img;
                images.push_back(io::encode(img));
            }
            return io::dump({{"images", images}, {"dual_agrees", agree}});
        };
    });

    auto* prod = leaf(sys, "product", "add the product of two nodes with both projections");
    prod->add_option("system", o.input, "system JSON")->required();
    prod->add_option("--nodes", o.nodes, "two node ids, e.g. 1,2")->delimiter(',')->required()->expected(2);
    prod->callback([&] {
        action = [&] {
            auto s = load_system(o);
            for (auto id : o.nodes)
                if (id >= s.nodes().size())
                    throw ParseError("--nodes", "unknown node " + std::to_string(id));
            auto r = product_embedding(s, o.nodes[0], o.nodes[1]);
            return io::dump(with_system(
                {{"node", r.node}, {"arrow_to_first", r.arrow_to_first}, {"arrow_to_second", r.arrow_to_second}},
                s));
        };
    });

    auto* graph = leaf(sys, "graph", "graph re-embedding: append z = f over a node");
    graph->add_option("system", o.input, "system JSON")->required();
    graph->add_option("--node", o.node, "node to extend")->capture_default_str();
    graph->add_option("--function", o.function, "f as JSON text or a file: {num, den} or a polynomial")
        ->required();
    graph->add_option("--extension", o.extension, "A1 or P1")->capture_default_str();
    graph->callback([&] {
        action = [&] {
            auto s = load_system(o);
            if (o.node >= s.nodes().size())
                throw ParseError("--node", "unknown node " + std::to_string(o.node));
            auto f = io::decode_function(inline_or_file(o.function, "--function"), s.field(), s.base_rank(),
                                         "--function");
            auto r = graph_embedding(s, o.node, f, extension_flag(o.extension));
            const auto& n = s.node(r.node);
            return io::dump(with_system({{"node", r.node},
                                         {"arrow", r.arrow},
                                         {"function", io::encode(f, n.names(s.base_rank()))},
                                         {"monomial", n.names(s.base_rank()).back()}},
                                        s));
        };
    });

    auto* sep = leaf(sys, "separate", "find an embedding separating two registered valuations");
    sep->add_option("system", o.input, "system JSON")->required();
    sep->add_option("--pair", o.nodes, "two valuation indices, e.g. 0,1")->delimiter(',')->required()->expected(2);
    sep->callback([&] {
        action = [&] {
            auto s = load_system(o);
            for (auto v : o.nodes)
                if (v >= s.valuations().size())
                    throw ParseError("--pair", "unknown valuation " + std::to_string(v));
            SeparationOptions so;
            so.budget = o.budget;
            so.seed = o.seed;
            auto r = separate_points(s, o.nodes[0], o.nodes[1], so);
            return io::dump(with_system(io::encode(s, r), s));
        };
    });

    auto* wit = leaf(sys, "witness", "node on which a function is a monomial pullback");
    wit->add_option("system", o.input, "system JSON")->required();
    wit->add_option("--function", o.function, "f as JSON text or a file")->required();
    wit->add_option("--extension", o.extension, "A1 or P1")->capture_default_str();
    wit->callback([&] {
        action = [&] {
            auto s = load_system(o);
            auto f = io::decode_function(inline_or_file(o.function, "--function"), s.field(), s.base_rank(),
                                         "--function");
            auto w = star_witness(s, f, extension_flag(o.extension));
            return io::dump(with_system(io::encode(s, w), s));
        };
    });

    auto* lim = leaf(sys, "limit-check", "finite-stage compatibility and lifting of a tuple");
    lim->add_option("system", o.input, "system JSON")->required();
    lim->add_option("tuple", o.second_input, "{subdiagram: {nodes, arrows}, tuple: [{node, point}]}")->required();
    lim->callback([&] {
        action = [&] {
            auto s = load_system(o);
            auto j = io::load_file(o.second_input);
            std::string path = o.second_input + ":$";
            auto d = io::decode_subdiagram(member(j, "subdiagram", path), s, path + ".subdiagram");
            auto t = io::decode_tuple(member(j, "tuple", path), s, path + ".tuple");
            auto r = finite_stage_limit_check(s, d, t);
            return io::dump({{"result", io::encode(r)}, {"subdiagram", io::encode(d)}});
        };
    });

    auto* probe = leaf(sys, "probe", "limit check on tuples induced by registered K-points");
    probe->add_option("system", o.input, "system JSON")->required();
    probe->add_option("--nodes", o.nodes, "node ids of the subdiagram (default: every node)")->delimiter(',');
    probe->add_option("--arrows", o.arrows, "arrow indices (default: all arrows among the nodes)")->delimiter(',');
    probe->add_option("--samples", o.samples, "number of K-points")->capture_default_str();
    probe->callback([&] {
        action = [&] {
            auto s = load_system(o);
            if (o.nodes.empty())
                for (const auto& n : s.nodes())
                    o.nodes.push_back(n.id);
            json dj = {{"nodes", o.nodes}};
            if (!o.arrows.empty())
                dj["arrows"] = o.arrows;
            auto d = io::decode_subdiagram(dj, s, "--nodes");
            auto r = surjectivity_probe(s, d, o.samples);
            return io::dump({{"report", io::encode(r)}, {"subdiagram", io::encode(d)}});
        };
    });

    auto* verify = leaf(sys, "verify", "check every arrow commutes with tropicalization");
    verify->add_option("system", o.input, "system JSON")->required();
    verify->callback([&] {
        action = [&] {
            auto s = load_system(o);
            json reports = json::array();
            bool passed = true;
            for (std::size_t a = 0; a < s.arrows().size(); ++a) {
                auto r = verify_morphism(s, a);
                auto j = io::encode(s, r);
                j["coordinates_compatible"] = coordinates_compatible(s, a);
                passed = passed && r.passed;
                reports.push_back(std::move(j));
            }
            return io::dump({{"passed", passed}, {"arrows", reports}});
        };
    });

    auto* svg = leaf(render, "svg", "SVG drawing of a complex in rank 2 (or of a polynomial's hypersurface)");
    svg->add_option("input", o.input, "complex JSON or polynomial JSON")->required();
    svg->callback([&] {
        action = [&] {
            auto j = io::load_file(o.input);
            std::string path = o.input + ":$";
            PolyhedralComplex c = j.is_object() && j.contains("terms")
                                      ? trop_hypersurface(io::decode_poly(j, field_flag(o), path))
                                      : io::decode_complex(j, path);
            SvgWindow w;
            if (!o.window.empty()) {
                try {
                    w = SvgWindow::parse(o.window);
                } catch (const std::invalid_argument& e) {
                    throw ParseError("--svg-window", e.what());
                }
            }
            return render_svg(c, w);
        };
    });

    std::vector<const char*> argv{"tropext"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        std::string artifact = action();
        if (o.out.empty()) {
            out << artifact;
        } else {
            std::ofstream f(o.out, std::ios::binary);
            if (!f)
                throw ParseError("--out", "cannot write " + o.out);
            f << artifact;
        }
        return 0;
    } catch (const ParseError& e) {
        err << io::dump({{"error", "malformed-input"}, {"path", e.path()}, {"message", e.what()}});
        return 2;
    } catch (const DomainError& e) {
        err << io::dump({{"error", "domain"}, {"message", e.what()}});
        return 1;
    }
}

} // namespace tropext::cli
