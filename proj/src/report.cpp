#include "bpl/report.hpp"

#include "bpl/error.hpp"

#include <cstdio>
#include <functional>
#include <sstream>

namespace bpl {

namespace {

Json refusal(const Error& e) {
    return Json{{"status", kind_name(e.kind()) == std::string("not-certified") ? "not-certified" : "refused"},
                {"error", kind_name(e.kind())},
                {"message", e.what()}};
}

// Runs f and stores its JSON, or a structured refusal plus a copy in the refusal list.
void attempt(Json& slot, Json& refusals, const std::string& check, const std::function<Json()>& f) {
    try {
        slot = f();
    } catch (const Error& e) {
        slot = refusal(e);
        Json r = slot;
        r["check"] = check;
        refusals.push_back(r);
    }
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json disc_json(const CandidateDisc& d) {
    Json b = Json::array();
    for (const auto& p : d.bigon.boundary) b.push_back(point_json(p));
    return Json{{"from", d.from}, {"to", d.to}, {"index", d.index}, {"area", to_string(d.bigon.area)}, {"boundary", b}};
}

Json state_json(const FiberCycleState& s) { return Json{{"label", label_name(s.label)}, {"orientation", s.orientation}}; }

Json type_json(const SurfaceType& t) {
    return Json{{"orientable", t.orientable}, {"genus", t.genus}, {"crosscaps", t.crosscaps}, {"euler", t.euler}};
}

Json capacity_json(const CapacityBound& b) {
    return Json{{"sites", b.sites}, {"naive", b.naive}, {"refined", b.refined ? Json(*b.refined) : Json(nullptr)}};
}

// The default suite skips matchings consumed by a surgery.
bool wanted(const ReportOptions& o, const FiberedLagrangian& L, const std::string& name) {
    if (o.spheres.empty()) {
        for (const auto& m : L.surgery_marks)
            if (m.matching == name) return false;
        return true;
    }
    for (const auto& s : o.spheres)
        if (s == name) return true;
    return false;
}

Json soft_invariants(const FiberedLagrangian& L, const ReportOptions& opts, Json& refusals) {
    Json soft;
    attempt(soft["maslov_vector"], refusals, "maslov_vector", [&] { return Json(maslov_vector(L)); });
    attempt(soft["type"], refusals, "type", [&] { return type_json(orientability_and_type(L)); });
    Json pair = Json::object();
    for (const auto& sp : L.spheres)
        if (wanted(opts, L, sp.name))
            attempt(pair[sp.name], refusals, "homology_pairing:" + sp.name, [&] { return Json(homology_pairing(L, sp)); });
    soft["homology_pairings"] = pair;
    attempt(soft["monotone"], refusals, "monotone_areas", [&] {
        const AreaAssignment a = solve_monotone_areas(L, opts.kappa);
        return Json{{"feasible", true}, {"kappa", to_string(opts.kappa)}, {"target", to_string(a.target)},
                    {"faces", a.areas.size()}};
    });
    attempt(soft["min_r"], refusals, "min_r", [&] { return capacity_json(min_r(L)); });
    return soft;
}

Json holonomy_json(const FiberedLagrangian& L) {
    const Holonomy h = holonomy(L);
    Json trace = Json::array();
    for (const auto& s : h.trace) trace.push_back(state_json(s));
    return Json{{"closes", h.closes}, {"orientation_preserving", h.orientation_preserving}, {"trace", trace}};
}

Json fibered_report(const FiberedLagrangian& L, const ReportOptions& opts) {
    Json r, refusals = Json::array();
    r["id"] = L.id;
    r["builder"] = L.builder;
    r["params"] = L.params;
    r["soft"] = soft_invariants(L, opts, refusals);
    Json hf = Json::object(), certs = Json::object();
    for (const auto& sp : L.spheres) {
        if (!wanted(opts, L, sp.name)) continue;
        attempt(hf[sp.name], refusals, "hf:" + sp.name, [&] {
            const SphereFloer f = hf_with_sphere(L, sp);
            Json c = Json::array();
            for (const auto& d : f.certificate) c.push_back(disc_json(d));
            certs[sp.name] = c;
            return Json{{"rank", f.rank}, {"generators", f.generators}, {"vanishing_differential", true}};
        });
    }
    r["hard"]["hf"] = hf;
    if (L.builder == "T")
        attempt(r["hard"]["annulus_count_2d"], refusals, "annulus_count_2d",
                [&] { return Json(annulus_count_2d(L, displaced_copy(L))); });
    r["certificates"]["hf"] = certs;
    attempt(r["certificates"]["holonomy"], refusals, "holonomy", [&] { return holonomy_json(L); });
    r["not_certified"] = refusals;
    return r;
}

Json pair_report(const FiberedLagrangian& L, const FiberedLagrangian& Lp, const ReportOptions& opts) {
    Json r, refusals = Json::array();
    r["id"] = L.id;
    r["L"] = Json{{"id", L.id}, {"maslov", maslov_longitude(L)}};
    r["Lp"] = Json{{"id", Lp.id}, {"maslov", maslov_longitude(Lp)}};
    attempt(r["hard"]["hf_tori"], refusals, "hf_tori", [&] {
        const ToriFloer t = hf_tori(L, Lp, opts.local_systems);
        Json specs = Json::array();
        for (const auto& s : t.specializations)
            specs.push_back(Json{{"name", s.name}, {"ratio", to_string(s.ratio)}, {"rank", s.rank}, {"rank_direct", s.rank_direct}});
        Json cert = Json::array();
        for (const auto& d : t.certificate) cert.push_back(disc_json(d));
        r["certificates"]["hf_tori"] = cert;
        return Json{{"lambda", t.lambda},
                    {"dots", t.dots},
                    {"parallel", t.green},
                    {"antiparallel", t.blue},
                    {"rank_generic", t.rank_generic},
                    {"grading_modulus", t.complex.grading_modulus ? Json(*t.complex.grading_modulus) : Json(nullptr)},
                    {"differential_squares_to_zero", differential_squares_to_zero(t.complex)},
                    {"specializations", specs}};
    });
    r["not_certified"] = refusals;
    return r;
}

Json threefold_report(const ThreefoldLagrangian& T, const ReportOptions& opts) {
    Json r, refusals = Json::array();
    r["id"] = T.id;
    r["n"] = T.n;
    r["fiber"] = Json{{"id", T.fiber_piece.id}, {"params", T.fiber_piece.params}};
    attempt(r["soft"]["fiber_maslov_vector"], refusals, "fiber_maslov_vector",
            [&] { return Json(maslov_vector(T.fiber_piece)); });
    attempt(r["soft"]["fiber_type"], refusals, "fiber_type", [&] { return type_json(orientability_and_type(T.fiber_piece)); });
    attempt(r["soft"]["maslov_3d"], refusals, "maslov_3d", [&] {
        return Json{{"maslov", maslov_3d(T)}, {"winding", turning_number(T.base3)}, {"full_rotations", full_rotations(T)}};
    });
    r["soft"]["budget"] = Json{{"r_prime", T.budget.r_prime}, {"eta", T.budget.eta}, {"eta_tilde", T.budget.eta_tilde}, {"r", T.r}};
    attempt(r["hard"]["annulus"], refusals, "annulus_count", [&] {
        const AnnulusCount a = annulus_count(T);
        return Json{{"h", a.h},
                    {"parallel_per_crossing", a.parallel_per_crossing},
                    {"antiparallel_per_crossing", a.antiparallel_per_crossing},
                    {"parallel", a.parallel},
                    {"antiparallel", a.antiparallel},
                    {"total", a.total},
                    {"count", a.count}};
    });
    Json hf = Json::object();
    for (const auto& sp : T.fiber_piece.spheres) {
        if (sp.name.rfind("S", 0) != 0 || !wanted(opts, T.fiber_piece, sp.name)) continue;
        attempt(hf[sp.name], refusals, "hf_3d:" + sp.name, [&] {
            const Floer3 f = hf_3d(T, vertical_sphere(T, sp.name));
            return Json{{"rank", f.rank}, {"crossings", f.crossings}};
        });
    }
    r["hard"]["hf_3d"] = hf;
    r["not_certified"] = refusals;
    return r;
}

Json soft_of(const FiberedLagrangian& L) {
    Json refusals = Json::array();
    Json s = soft_invariants(L, {}, refusals);
    s.erase("min_r");
    if (s["monotone"].contains("faces")) s["monotone"].erase("faces");
    return s;
}

Json catalog_t_slice(const Json& spec) {
    const int c = spec.value("c", 0), m = spec.value("m", 0);
    const int kmin = spec.value("k_min", 0), kmax = spec.value("k_max", -1);
    if (c < 0 || m < 0 || kmin < 0) throw Error(ErrorKind::Schema, "field 'c'/'m'/'k_min': must be non-negative");
    Json cat{{"family", "T_slice"}, {"c", c}, {"m", m}, {"entries", Json::array()}, {"certificates", Json::array()},
             {"discrepancies", Json::array()}};
    std::vector<Json> soft;
    std::vector<std::vector<long>> hard;
    for (int k = kmin; k <= kmax; ++k) {
        const FiberedLagrangian L = build_T(k, k + c, m);
        std::vector<long> ranks;
        for (const char* s : {"S1", "S2", "S3"}) ranks.push_back(hf_with_sphere(L, sphere_named(L, s)).rank);
        soft.push_back(soft_of(L));
        hard.push_back(ranks);
        cat["entries"].push_back(Json{{"id", L.id}, {"k", k}, {"l", k + c}, {"m", m}, {"soft", soft.back()},
                                      {"hf", Json{{"S1", ranks[0]}, {"S2", ranks[1]}, {"S3", ranks[2]}}}});
    }
    for (size_t i = 0; i < hard.size(); ++i)
        for (size_t j = i + 1; j < hard.size(); ++j) {
            const std::string a = cat["entries"][i]["id"], b = cat["entries"][j]["id"];
            if (soft[i] != soft[j])
                cat["discrepancies"].push_back(Json{{"a", a}, {"b", b}, {"reason", "soft invariants differ"}});
            if (hard[i][1] != hard[j][1])
                cat["certificates"].push_back(Json{{"a", a}, {"b", b}, {"distinguished_by", "S2"},
                                                   {"values", Json::array({hard[i][1], hard[j][1]})}});
            else
                cat["discrepancies"].push_back(Json{{"a", a}, {"b", b}, {"reason", "equal S2 rank"}});
        }
    return cat;
}

Json catalog_lambda(const Json& spec) {
    Json cat{{"family", "Lambda_gcd"}, {"entries", Json::array()}, {"certificates", Json::array()},
             {"discrepancies", Json::array()}};
    const Json diffs = spec.value("diffs", Json::array());
    std::vector<long> Ns;
    for (size_t i = 0; i < diffs.size(); ++i) {
        std::vector<std::array<int, 3>> pieces;
        for (const auto& d : diffs[i]) {
            const int v = d.get<int>();
            if (v < 0) throw Error(ErrorKind::Schema, "field 'diffs[" + std::to_string(i) + "]': must be non-negative");
            pieces.push_back({0, v, 0});
        }
        const FiberedLagrangian L = build_Lambda(pieces);
        const C3Invariants inv = c3_product_invariants(L);
        Ns.push_back(inv.N);
        cat["entries"].push_back(Json{{"diffs", diffs[i]}, {"maslov", inv.maslov}, {"N", inv.N}});
    }
    for (size_t i = 0; i < Ns.size(); ++i)
        for (size_t j = i + 1; j < Ns.size(); ++j) {
            Json e{{"a", i}, {"b", j}, {"values", Json::array({Ns[i], Ns[j]})}};
            if (Ns[i] != Ns[j]) {
                e["distinguished_by"] = "N";
                cat["certificates"].push_back(e);
            } else {
                e["reason"] = "equal minimal Maslov number";
                cat["discrepancies"].push_back(e);
            }
        }
    return cat;
}

Json catalog_xi_annulus(const Json& spec) {
    const int n = spec.value("n", 0), l1 = spec.value("l1", 0);
    const Json ks = spec.value("k1", Json::array());
    Json cat{{"family", "Xi_annulus"}, {"n", n}, {"l1", l1}, {"entries", Json::array()}, {"certificates", Json::array()},
             {"discrepancies", Json::array()}};
    std::vector<long> counts, mus;
    for (const auto& kj : ks) {
        const int k1 = kj.get<int>();
        const FiberedLagrangian Xi = build_Xi(1, {{{1, 1, 1}}, {{k1, l1, 1}}});
        const ThreefoldLagrangian T = with_displaced_pair(build_gamma(n, Xi));
        const AnnulusCount a = annulus_count(T);
        counts.push_back(a.count);
        mus.push_back(maslov_3d(T));
        cat["entries"].push_back(Json{{"id", T.id}, {"k1", k1}, {"maslov_3d", mus.back()}, {"h", a.h}, {"annulus_count", a.count}});
    }
    for (size_t i = 0; i < counts.size(); ++i)
        for (size_t j = i + 1; j < counts.size(); ++j) {
            Json e{{"a", i}, {"b", j}, {"values", Json::array({counts[i], counts[j]})}};
            if (mus[i] != mus[j]) cat["discrepancies"].push_back(Json{{"a", i}, {"b", j}, {"reason", "Maslov differs"}});
            if (counts[i] != counts[j]) {
                e["distinguished_by"] = "annulus_count";
                cat["certificates"].push_back(e);
            } else {
                e["reason"] = "equal annulus count";
                cat["discrepancies"].push_back(e);
            }
        }
    return cat;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Canvas {
    double minx = 0, miny = 0, maxx = 1, maxy = 1, scale = 1;
    bool init = false;
    std::ostringstream body;

    void extend(const Point& p) {
        const double x = p.x.convert_to<double>(), y = p.y.convert_to<double>();
        if (!init) {
            minx = maxx = x;
            miny = maxy = y;
            init = true;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        miny = std::min(miny, y);
        maxy = std::max(maxy, y);
    }
    void extend(const BaseLoop& l) {
        for (const auto& p : l.vertices) extend(p);
    }
    std::string X(const Point& p) const { return num(20 + (p.x.convert_to<double>() - minx) * scale); }
    std::string Y(const Point& p) const { return num(20 + (maxy - p.y.convert_to<double>()) * scale); }

    void poly(const BaseLoop& l, const std::string& stroke, const std::string& extra = "") {
        body << "<" << (l.closed ? "polygon" : "polyline") << " points=\"";
        for (size_t i = 0; i < l.vertices.size(); ++i)
            body << (i ? " " : "") << X(l.vertices[i]) << "," << Y(l.vertices[i]);
        body << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\"" << extra << "/>\n";
    }
    void dot(const Point& p, const std::string& fill, double r = 3) {
        body << "<circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"" << num(r) << "\" fill=\"" << fill << "\"/>\n";
    }
    void cross(const Point& p) {
        const std::string x = X(p), y = Y(p);
        const double cx = std::stod(x), cy = std::stod(y);
        body << "<path d=\"M" << num(cx - 3) << "," << num(cy - 3) << " L" << num(cx + 3) << "," << num(cy + 3) << " M"
             << num(cx - 3) << "," << num(cy + 3) << " L" << num(cx + 3) << "," << num(cy - 3)
             << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    }
    void text(const Point& p, const std::string& s, double dy = -5) {
        body << "<text x=\"" << X(p) << "\" y=\"" << num(std::stod(Y(p)) + dy) << "\" font-size=\"9\" font-family=\"monospace\">"
             << s << "</text>\n";
    }
    std::string finish(const std::string& title) const {
        const double w = (maxx - minx) * scale + 40, h = (maxy - miny) * scale + 60;
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
           << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
        os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        os << "<text x=\"20\" y=\"" << num(h - 15) << "\" font-size=\"12\" font-family=\"monospace\">" << title << "</text>\n";
        os << body.str() << "</svg>\n";
        return os.str();
    }
    void fit() {
        const double span = std::max(maxx - minx, maxy - miny);
        scale = span > 0 ? 760.0 / span : 1;
    }
};

std::string token_label(const PlacedToken& t) {
    return std::string(kind_name(t.token.kind)) + (t.token.traversal > 0 ? "+" : "-");
}

void draw_fibered(Canvas& cv, const FiberedLagrangian& L, const std::string& stroke) {
    cv.poly(L.loop, stroke);
    for (const auto& sp : L.spheres)
        cv.poly(sp.path, "#2a7", " stroke-dasharray=\"4 3\"");
    for (const auto& t : L.tokens) {
        const Point p = point_at(L.loop, t.pos);
        cv.cross(p);
        cv.text(p, token_label(t));
    }
    for (const auto& cs : crossing_states(L)) cv.dot(cs.crossing.p, cs.parallel ? "#1a5fd0" : "#d03a1a");
}

}  // namespace

Json invariant_report(const Construction& c, const ReportOptions& opts) {
    Json r;
    switch (c.kind) {
        case ConstructionKind::Fibered: r = fibered_report(*c.fibered, opts); break;
        case ConstructionKind::Pair: r = pair_report(c.pair->first, c.pair->second, opts); break;
        case ConstructionKind::Threefold: r = threefold_report(*c.threefold, opts); break;
    }
    r["kind"] = construction_kind_name(c.kind);
    r["notes"] = c.notes;
    return r;
}

Json family_catalog(const Json& spec) {
    if (!spec.is_object() || !spec.contains("family") || !spec["family"].is_string())
        throw Error(ErrorKind::Schema, "field 'family': missing");
    const std::string f = spec["family"];
    try {
        if (f == "T_slice") return catalog_t_slice(spec);
        if (f == "Lambda_gcd") return catalog_lambda(spec);
        if (f == "Xi_annulus") return catalog_xi_annulus(spec);
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::Schema, std::string("family spec: ") + e.what());
    }
    throw Error(ErrorKind::Schema, "field 'family': unknown family '" + f + "'");
}

size_t discrepancy_count(const Json& catalog) {
    return catalog.contains("discrepancies") ? catalog["discrepancies"].size() : 0;
}

std::string render_svg(const Construction& c) {
    Canvas cv;
    std::string title;
    if (c.fibered) {
        cv.extend(c.fibered->loop);
        for (const auto& sp : c.fibered->spheres) cv.extend(sp.path);
        cv.fit();
        draw_fibered(cv, *c.fibered, "#111");
        title = c.fibered->id + "  Maslov " + std::to_string(maslov_longitude(*c.fibered));
    } else if (c.pair) {
        const auto& [L, Lp] = *c.pair;
        cv.extend(L.loop);
        cv.extend(Lp.loop);
        cv.fit();
        cv.poly(L.loop, "#111");
        cv.poly(Lp.loop, "#7a3fb0");
        for (const auto& cs : crossing_states(L, Lp)) cv.dot(cs.crossing.p, cs.parallel ? "#1a9f3a" : "#1a5fd0", 3.5);
        title = L.id + " / " + Lp.id;
    } else {
        const ThreefoldLagrangian& T = *c.threefold;
        cv.extend(T.base3);
        if (T.displaced_base) cv.extend(*T.displaced_base);
        cv.fit();
        cv.poly(T.base3, "#111");
        if (T.displaced_base) cv.poly(*T.displaced_base, "#999", " stroke-dasharray=\"2 2\"");
        for (const auto& b : T.blocks) {
            const Point p = point_at(T.base3, b.placement);
            cv.dot(p, "#d08a1a", 4);
            cv.text(p, b.name + " " + std::to_string(b.repeats));
        }
        for (const auto& x : self_intersections(T.base3)) cv.cross(x.p);
        title = T.id + "  winding " + std::to_string(turning_number(T.base3)) + "  Maslov " + std::to_string(maslov_3d(T));
    }
    return cv.finish(title);
}

std::string render_text(const Json& j) {
    std::ostringstream os;
    std::function<void(const Json&, const std::string&)> walk = [&](const Json& v, const std::string& path) {
        if (v.is_object()) {
            if (v.empty()) os << path << ": {}\n";
            for (auto it = v.begin(); it != v.end(); ++it) walk(it.value(), path.empty() ? it.key() : path + "." + it.key());
        } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); })) {
            for (size_t i = 0; i < v.size(); ++i) walk(v[i], path + "[" + std::to_string(i) + "]");
        } else {
            os << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    };
    walk(j, "");
    return os.str();
}

}  // namespace bpl
