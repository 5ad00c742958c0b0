#include "steinhaus/json_io.hpp"

#include <limits>

namespace steinhaus::jsonio {

Json to_json(const BigInt& n) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
    return n.str();
}

Json to_json(const Rational& q) {
    Json j;
    j["num"] = to_json(boost::multiprecision::numerator(q));
    j["den"] = to_json(boost::multiprecision::denominator(q));
    return j;
}

Json to_json(const sos::SquaresWitness& w) {
    Json j;
    j["n"] = w.n;
    j["terms"] = w.terms;
    return j;
}

Json to_json(const sos::FourPowerObstruction& o) {
    Json j;
    j["nu"] = o.nu;
    j["k"] = o.k;
    return j;
}

Json to_json(const forms::CharPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients) coeffs.push_back(to_json(c));
    Json j;
    j["degree"] = p.degree();
    j["coefficients"] = coeffs;  // ascending powers of lambda
    return j;
}

Json to_json(const qualify::ValueCounterexample& ce) {
    Json j;
    j["x"] = ce.x;
    j["value"] = ce.value;
    j["obstruction"] = ce.obstruction ? to_json(*ce.obstruction) : Json(nullptr);
    return j;
}

Json to_json(const qualify::FormVerdict& v) {
    Json j;
    if (const auto* q = std::get_if<qualify::Qualifies>(&v)) {
        j["kind"] = "qualifies";
        j["box_radius"] = q->box_radius;
        j["determinant"] = to_json(q->determinant);
    } else if (const auto* ce = std::get_if<qualify::ValueCounterexample>(&v)) {
        j["kind"] = "value_counterexample";
        j["x"] = ce->x;
        j["value"] = ce->value;
        j["obstruction"] = ce->obstruction ? to_json(*ce->obstruction) : Json(nullptr);
    } else {
        const auto& sq = std::get<qualify::SquareDeterminant>(v);
        j["kind"] = "square_determinant";
        j["root"] = to_json(sq.root);
    }
    return j;
}

Json to_json(const qualify::TilingLevel& level) {
    Json j;
    j["det_b"] = to_json(level.det_b);
    j["integer_level"] = level.integer_level ? to_json(*level.integer_level) : Json(nullptr);
    return j;
}

Json to_json(const qualify::ResidueClaim& claim) {
    Json j;
    j["claim_id"] = claim.claim_id;
    j["modulus"] = claim.modulus;
    j["description"] = claim.description;
    j["holds"] = claim.holds;
    j["counterexample"] = claim.counterexample ? Json(*claim.counterexample) : Json(nullptr);
    return j;
}

Json to_json(const qualify::VerificationReport& report) {
    Json j;
    j["name"] = report.name;
    Json params;
    for (const auto& [key, value] : report.parameters) params[key] = value;
    j["parameters"] = params;
    j["checked_count"] = report.checked_count;
    Json ces = Json::array();
    for (const auto& ce : report.counterexamples) ces.push_back(to_json(ce));
    j["counterexamples"] = ces;
    j["passed"] = report.passed;
    return j;
}

Json to_json(const planar::LinearSosPair& p) {
    return Json::array({p.alpha, p.beta, p.gamma, p.delta});
}

Json to_json(const planar::BinaryFormReport& report) {
    Json j;
    j["t_bound"] = report.t_bound;
    j["premise_holds"] = report.premise_holds;
    j["failure_t"] = report.failure_t ? Json(*report.failure_t) : Json(nullptr);
    j["failure_value"] = report.failure_value ? Json(*report.failure_value) : Json(nullptr);
    j["det_b"] = to_json(report.det_b);
    j["det_root"] = report.det_root ? to_json(*report.det_root) : Json(nullptr);
    j["poly"] = Json::array({report.poly.c2, report.poly.c1, report.poly.c0});
    Json decs = Json::array();
    for (const auto& d : report.decompositions) decs.push_back(to_json(d));
    j["decompositions"] = decs;
    return j;
}

Json to_json(const search::CandidateRecord& record) {
    Json j;
    j["coefficients"] = Json::array({record.a, record.b, record.c});
    j["verdict"] = to_json(qualify::FormVerdict(record.verdict));
    j["box_radius"] = record.box_radius;
    j["proven"] = record.proven;
    return j;
}

}  // namespace steinhaus::jsonio
