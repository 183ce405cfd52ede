#include "edr/document.hpp"

#include <json.hpp>

#include "edr/demo.hpp"
#include "edr/kaplansky.hpp"
#include "edr/pullback.hpp"
#include "edr/syntax.hpp"
#include "edr/witnesses.hpp"

namespace edr {

namespace {

using json = nlohmann::ordered_json;

json integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json text(const Element& e) { return format_element(e); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(text(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json elements_json(const std::vector<Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(text(x));
  return out;
}

void require_args(const DocumentRequest& req, std::size_t n, std::size_t offset = 0) {
  if (req.args.size() != n + offset)
    throw Error(ErrorCode::InvalidArgument, req.command + " expects " + std::to_string(n) +
                                                " argument" + (n == 1 ? "" : "s"));
}

std::vector<Element> parse_args(const DocumentRequest& req, std::size_t n,
                                std::size_t offset = 0) {
  require_args(req, n, offset);
  std::vector<Element> out;
  for (std::size_t i = offset; i < req.args.size(); ++i)
    out.push_back(parse_element(req.ring, req.args[i]));
  return out;
}

struct Built {
  json inputs = json::array();
  json outputs = json::object();
  bool verified = false;
  std::string kind;
};

bool hermite_ok(const Matrix& a, const HermiteResult& h) {
  return h.P.rows() == a.rows() && h.P * a == h.T && is_unit(matrix_det(h.P)) &&
         h.T.is_upper_triangular();
}

json reduction_json(const DiagonalReduction& red) {
  json out;
  out["P"] = matrix_json(red.P);
  out["Q"] = matrix_json(red.Q);
  out["D"] = matrix_json(red.D);
  out["diagonal"] = elements_json(red.D.diagonal());
  out["passes"] = red.passes;
  return out;
}

json obstruction_json(const ObstructionCertificate& ob) {
  json out;
  out["x0"] = integer(ob.x0);
  out["y0"] = integer(ob.y0);
  out["statement"] = ob.statement;
  json checks = json::array();
  for (const auto& fd : ob.checked_divisibilities)
    checks.push_back({{"divisor", integer(fd.divisor)},
                      {"dividend", integer(fd.dividend)},
                      {"divides", false}});
  out["checked_divisibilities"] = std::move(checks);
  if (ob.constant_not_unit) out["constant_not_unit"] = true;
  return out;
}

Built gcd_doc(const DocumentRequest& req) {
  auto xs = parse_args(req, 2);
  BezoutCertificate c = gcd_certificate(xs[0], xs[1]);
  Built b;
  b.inputs = elements_json(xs);
  b.outputs["d"] = text(c.d);
  b.outputs["alpha"] = text(c.alpha);
  b.outputs["beta"] = text(c.beta);
  b.outputs["cofactors"] = elements_json({c.cf, c.cg});
  b.verified = c.certifies(xs[0], xs[1]);
  return b;
}

Built comax_doc(const DocumentRequest& req) {
  auto xs = parse_args(req, 2);
  Built b;
  b.inputs = elements_json(xs);
  const bool comax = are_comaximal(xs[0], xs[1]);
  b.outputs["comaximal"] = comax;
  if (comax) {
    Combination comb = comaximal_combination(xs[0], xs[1]);
    b.outputs["alpha"] = text(comb.alpha);
    b.outputs["beta"] = text(comb.beta);
    b.verified = comb.alpha * xs[0] + comb.beta * xs[1] == one(req.ring);
  } else {
    BezoutCertificate c = gcd_certificate(xs[0], xs[1]);
    b.outputs["gcd"] = text(c.d);
    b.verified = c.certifies(xs[0], xs[1]) && !is_unit(c.d);
  }
  if (req.ring == Ring::Pullback) {
    ComaximalityBreakdown br = comaximality_breakdown(xs[0], xs[1]);
    b.outputs["breakdown"] = {{"poly_level", br.poly_level},
                              {"int_level", integer(br.int_level)}};
    b.verified = b.verified && br.comaximal == comax;
  }
  return b;
}

Built kaplansky_doc(const DocumentRequest& req) {
  auto xs = parse_args(req, 3);
  KaplanskyPair pq = kaplansky_solve(xs[0], xs[1], xs[2]);
  KaplanskyWitness w{xs[0], xs[1], xs[2], pq.p, pq.q};
  Built b;
  b.inputs = elements_json(xs);
  b.outputs["p"] = text(pq.p);
  b.outputs["q"] = text(pq.q);
  const bool remark = kaplansky_remark_holds(w);
  b.outputs["remark"] = remark;
  b.verified = verify_witness(w) && remark;
  return b;
}

Built hermite_doc(const DocumentRequest& req) {
  require_args(req, 1);
  Matrix a = parse_matrix(req.ring, req.args[0]);
  HermiteResult h = hermite_triangularize(a);
  Built b;
  b.inputs = json::array({matrix_json(a)});
  b.outputs["P"] = matrix_json(h.P);
  b.outputs["T"] = matrix_json(h.T);
  b.verified = hermite_ok(a, h);
  return b;
}

Built diag_doc(const DocumentRequest& req) {
  require_args(req, 1);
  Matrix a = parse_matrix(req.ring, req.args[0]);
  DiagonalReduction red = diagonal_reduce(a, req.cap);
  Built b;
  b.inputs = json::array({matrix_json(a)});
  b.outputs = reduction_json(red);
  b.verified = verify_reduction(a, red);
  return b;
}

Built crit_doc(const DocumentRequest& req) {
  auto xs = parse_args(req, 3);
  CritWitness w = crit_witness(xs[0], xs[1], xs[2]);
  Built b;
  b.inputs = elements_json(xs);
  b.outputs["lambda"] = text(w.lambda);
  b.outputs["u"] = text(w.u);
  b.outputs["v"] = text(w.v);
  const bool strong = is_strengthened(w);
  b.outputs["strengthened"] = strong;
  b.verified = verify_witness(w) && strong;
  return b;
}

Built critdomain_doc(const DocumentRequest& req) {
  auto xs = parse_args(req, 3);
  CritDomainWitness w = critdomain_witness(xs[0], xs[1], xs[2]);
  Built b;
  b.inputs = elements_json(xs);
  b.outputs["lambda"] = text(w.lambda);
  b.outputs["a"] = text(w.a);
  b.outputs["b"] = text(w.b);
  b.verified = verify_witness(w);
  return b;
}

json found_json(const Element& lambda) {
  return {{"decision", "found"}, {"found", {{"lambda", text(lambda)}}}};
}

Built asr1_doc(const DocumentRequest& req) {
  auto xs = parse_args(req, 3);
  const Element &x = xs[0], &y = xs[1], &z = xs[2];
  Built b;
  b.inputs = elements_json(xs);
  if (req.ring != Ring::Pullback) {
    Element lambda = quotient_sr1_lambda(x, y, z);
    b.outputs = found_json(lambda);
    b.verified = are_comaximal(x + lambda * y, z);
    return b;
  }
  Asr1Decision dec = asr1_decide(x, y, z);
  if (const auto* f = std::get_if<Asr1Found>(&dec)) {
    b.outputs = found_json(f->lambda);
    b.verified = are_comaximal(x + f->lambda * y, z);
  } else {
    const auto& ob = std::get<Asr1Refuted>(dec).obstruction;
    b.outputs["decision"] = "refuted";
    b.outputs["refuted"] = {{"obstruction", obstruction_json(ob)}};
    b.verified = ob.verify() && ob.x0 == x.integer_part() && ob.y0 == y.integer_part() &&
                 z.integer_part() == 0;
  }
  return b;
}

json factorization_json(const FactorizationWitness& w) {
  return {{"lambda", text(w.lambda)}, {"u", text(w.u)}, {"v", text(w.v)}};
}

const char* route_name(KaplanskyRoute r) {
  switch (r) {
    case KaplanskyRoute::Coefficients: return "coefficients";
    case KaplanskyRoute::Cofactors: return "cofactors";
    case KaplanskyRoute::Solver: return "solver";
    case KaplanskyRoute::UnitA: return "unit";
  }
  return "unknown";
}

Built transform_doc(const DocumentRequest& req) {
  if (req.args.empty())
    throw Error(ErrorCode::InvalidArgument, "transform expects a source kind");
  const std::string& source = req.args[0];
  auto xs = parse_args(req, 5 + (source == "kaplansky" || source == "pq3" ? 0 : 1), 1);
  Built b;
  b.kind = source;
  b.inputs = elements_json(xs);
  if (source == "kaplansky") {
    FactorizationWitness f = kaplansky_to_factorization({xs[0], xs[1], xs[2], xs[3], xs[4]});
    b.outputs["target"] = "factorization";
    b.outputs["witness"] = factorization_json(f);
    const bool strong = is_strengthened(f);
    b.outputs["strengthened"] = strong;
    b.verified = verify_witness(f) && strong;
  } else if (source == "factorization") {
    PQ3Witness w = factorization_to_pq3({xs[0], xs[1], xs[2], xs[3], xs[4], xs[5]});
    b.outputs["target"] = "pq3";
    b.outputs["witness"] = {{"p", text(w.p)}, {"q", text(w.q)}};
    b.verified = verify_witness(w);
  } else if (source == "pq3") {
    KaplanskyConversion k = pq3_to_kaplansky({xs[0], xs[1], xs[2], xs[3], xs[4]});
    b.outputs["target"] = "kaplansky";
    b.outputs["witness"] = {{"p", text(k.witness.p)}, {"q", text(k.witness.q)}};
    b.outputs["route"] = route_name(k.route);
    b.outputs["used_fallback"] = k.used_fallback();
    b.verified = verify_witness(k.witness);
  } else if (source == "star") {
    FactorizationWitness f = star_to_factorization({xs[0], xs[1], xs[2], xs[3], xs[4], xs[5]});
    b.outputs["target"] = "factorization";
    b.outputs["witness"] = factorization_json(f);
    b.verified = verify_witness(f);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown transform source '" + source + "'");
  }
  return b;
}

Built demo_doc(const DocumentRequest& req) {
  require_args(req, 1);
  if (req.args[0] != "mcgovern")
    throw Error(ErrorCode::InvalidArgument, "unknown demo '" + req.args[0] + "'");
  constexpr Ring R = Ring::Pullback;
  const Element X = Element::x(R), two(R, 2), five(R, 5);
  McGovernReport rep = mcgovern_demo();
  Built b;
  b.kind = "demo";
  bool ok = rep.residue_oracle_confirms;

  json refutation;
  refutation["inputs"] = elements_json({two, five, X});
  if (const auto* r = std::get_if<Asr1Refuted>(&rep.refutation)) {
    refutation["decision"] = "refuted";
    refutation["obstruction"] = obstruction_json(r->obstruction);
    ok = ok && r->obstruction.verify() && r->obstruction.x0 == 2 && r->obstruction.y0 == 5;
  } else {
    refutation["decision"] = "found";
    ok = false;
  }
  refutation["residue_oracle_confirms"] = rep.residue_oracle_confirms;
  b.outputs["refutation"] = std::move(refutation);

  const bool kap = kaplansky_holds(X, two, five, rep.witness.p, rep.witness.q);
  b.outputs["kaplansky"] = {{"inputs", elements_json({X, two, five})},
                            {"p", text(rep.witness.p)},
                            {"q", text(rep.witness.q)},
                            {"verified", kap}};
  ok = ok && kap;

  json shift = {{"inputs", json::array({2, 5})}, {"exists", rep.unit_shift.has_value()}};
  if (rep.unit_shift) shift["t"] = integer(*rep.unit_shift);
  b.outputs["unit_shift"] = std::move(shift);
  ok = ok && !rep.unit_shift;

  json red = reduction_json(rep.reduction);
  const bool red_ok = verify_reduction(rep.matrix, rep.reduction);
  const auto diag = rep.reduction.D.diagonal();
  const bool expected = diag.size() == 2 && associates(diag[0], one(R)) &&
                        associates(diag[1], five * X);
  red = {{"matrix", matrix_json(rep.matrix)}, {"P", red["P"]}, {"Q", red["Q"]},
         {"D", red["D"]}, {"diagonal", red["diagonal"]}, {"verified", red_ok && expected}};
  b.outputs["reduction"] = std::move(red);
  b.verified = ok && red_ok && expected;
  return b;
}

}  // namespace

Document build_document(const DocumentRequest& req) {
  Built b;
  Ring ring = req.ring;
  const std::string& c = req.command;
  if (c == "gcd") b = gcd_doc(req);
  else if (c == "comax") b = comax_doc(req);
  else if (c == "kaplansky") b = kaplansky_doc(req);
  else if (c == "hermite") b = hermite_doc(req);
  else if (c == "diag") b = diag_doc(req);
  else if (c == "crit") b = crit_doc(req);
  else if (c == "critdomain") b = critdomain_doc(req);
  else if (c == "asr1") b = asr1_doc(req);
  else if (c == "transform") b = transform_doc(req);
  else if (c == "demo") {
    b = demo_doc(req);
    ring = Ring::Pullback;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown command '" + c + "'");
  }
  if (b.kind.empty()) b.kind = c;

  json doc;
  doc["ring"] = std::string(ring_name(ring));
  doc["kind"] = b.kind;
  doc["inputs"] = std::move(b.inputs);
  doc["outputs"] = std::move(b.outputs);
  doc["verified"] = b.verified;
  doc["version"] = 1;
  return {doc.dump(2) + "\n", b.verified};
}

}  // namespace edr
