#include "puiseux/serialize.hpp"

namespace puiseux {

Json json_of_integer(const Integer& n) { return n.str(); }

Json json_of_fq(const FqElement& a) {
    Json arr = Json::array();
    for (const auto& c : a.rep()) arr.push_back(c.str());
    return arr;
}

Json json_of_field(const FqCtxPtr& ctx) {
    Json j;
    j["p"] = ctx->p.str();
    j["k"] = ctx->k;
    Json mod = Json::array();
    for (const auto& c : ctx->modulus) mod.push_back(c.str());
    j["modulus"] = mod;
    return j;
}

Json json_of_placeset(const PlaceSet& ps) {
    Json j;
    if (ps.center.infinity) j["center"] = "inf";
    else j["center"] = json_of_fq(ps.center.x0);
    Json exps = Json::array();
    for (const auto& ex : ps.expansions) {
        Json e;
        e["e"] = ex.e;
        e["f"] = ex.f;
        e["field"] = json_of_field(ex.field);
        e["lambda"] = json_of_fq(ex.lambda);
        Json terms = Json::array();
        for (const auto& [n, b] : ex.terms) terms.push_back(Json::array({n, json_of_fq(b)}));
        e["terms"] = terms;
        e["trunc"] = ex.trunc;
        exps.push_back(e);
    }
    j["expansions"] = exps;
    j["conservation"] = ps.conservation;
    j["delta"] = ps.delta;
    return j;
}

Json json_of_verdict(const PrimeVerdict& v) {
    Json j;
    j["p"] = v.p.str();
    j["status"] = status_str(v.status);
    if (v.status == PrimeStatus::Bad) j["reason"] = reason_str(v.reason);
    return j;
}

Json json_of_genus(const GenusReport& rep) {
    Json j;
    j["genus"] = rep.genus;
    if (rep.prime) j["prime"] = json_of_verdict(*rep.prime);
    Json contribs = Json::array();
    for (const auto& c : rep.contributions) {
        Json e;
        e["center"] = c.center;
        e["multiplier"] = c.multiplier;
        e["contribution"] = c.contribution;
        contribs.push_back(e);
    }
    j["contributions"] = contribs;
    Json checks = Json::array();
    for (const auto& c : rep.contributions) {
        Json e;
        e["center"] = c.center;
        e["conservation"] = c.conservation;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

Json json_of_polygon(const NewtonPolygon& np) {
    Json j;
    j["jmin"] = np.jmin;
    j["degy"] = np.degy;
    Json edges = Json::array();
    for (const auto& e : np.edges) {
        Json je;
        je["q"] = e.q;
        je["m"] = e.m;
        je["l"] = e.l;
        je["j0"] = e.j0;
        je["j1"] = e.j1;
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j;
}

Json json_of_tree(const PolygonTree& t) {
    Json j;
    j["content"] = t.content;
    Json edges = Json::array();
    for (const auto& e : t.edges) {
        Json je;
        je["q"] = e.q;
        je["m"] = e.m;
        je["l"] = e.l;
        Json prof = Json::array();
        for (const auto& p : e.profile) prof.push_back(Json::array({p.deg, p.mult}));
        je["profile"] = prof;
        Json children = Json::array();
        for (const auto& g : e.children) {
            Json jg;
            jg["mult"] = g.mult;
            Json subs = Json::array();
            for (const auto& [w, sub] : g.sub) {
                Json js;
                js["weight"] = w.den == 1 ? Json(w.num)
                                          : Json(std::to_string(w.num) + "/" +
                                                 std::to_string(w.den));
                js["tree"] = json_of_tree(sub);
                subs.push_back(js);
            }
            jg["subtrees"] = subs;
            children.push_back(jg);
        }
        je["children"] = children;
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j;
}

}  // namespace puiseux
