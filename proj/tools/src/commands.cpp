#include "hodgesig/io/commands.hpp"

#include "hodgesig/io/enumerate.hpp"
#include "hodgesig/signature.hpp"

#include <algorithm>

namespace hodgesig::io {

using hodgesig::to_string;

namespace {

Json enclosure_json(const Ball& ball, int digits) {
  DecimalEnclosure d = to_decimal(ball, digits);
  return {{"re", d.re}, {"im", d.im}, {"radius", d.radius}};
}

Json slopes_json(const WeilPolynomial& P) {
  Json out = Json::array();
  for (const Rational& s : newton_slopes(P)) out.push_back(hodgesig::to_string(s));
  return out;
}

const Json& field(const Json& payload, const char* name) {
  if (!payload.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return payload[name];
}

void reject_unknown(const Json& payload, std::initializer_list<std::string_view> allowed) {
  if (!payload.is_object()) throw InputError("payload must be a JSON object");
  for (const auto& [key, _] : payload.items()) {
    if (key == "schema") continue;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw InputError("unknown field '" + key + "'");
    }
  }
}

long small_integer(const Json& payload, const char* name) {
  Integer v = integer_from_json(field(payload, name), name);
  if (!v.fits_slong_p()) throw InputError(std::string("field '") + name + "' is out of range");
  return v.get_si();
}

BinaryForm form_from_json(const Json& value, const char* name) {
  std::vector<Rational> entries;
  if (value.is_array() && value.size() == 3) {
    for (const Json& e : value) entries.push_back(rational_from_json(e, name));
  } else if (value.is_array() && value.size() == 2 && value[0].is_array() && value[1].is_array() &&
             value[0].size() == 2 && value[1].size() == 2) {
    Rational a = rational_from_json(value[0][0], name);
    Rational b = rational_from_json(value[0][1], name);
    Rational c = rational_from_json(value[1][0], name);
    Rational d = rational_from_json(value[1][1], name);
    if (b != c) throw InputError(std::string("form '") + name + "' is not symmetric");
    entries = {a, b, d};
  } else {
    throw InputError(std::string("form '") + name + "' must be [g11, g12, g22] or a 2x2 matrix");
  }
  try {
    return BinaryForm(entries[0], entries[1], entries[2]);
  } catch (const DomainError& err) {
    throw InputError(std::string("form '") + name + "': " + err.what());
  }
}

Json form_to_json(const BinaryForm& f) {
  return Json::array({rational_to_json(f.g11()), rational_to_json(f.g12()), rational_to_json(f.g22())});
}

Place place_from_json(const Json& value) {
  if (value.is_string() && value.get<std::string>() == "real") return Place::real();
  try {
    return Place::finite(integer_from_json(value, "places"));
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
}

Json extension_json(const LocalQuadExtension& ext) {
  return {{"p", integer_to_json(ext.p)}, {"d", rational_to_json(ext.d)}, {"kind", to_string(ext.kind)}};
}

// Either {"d": ...} or {"kind": ...}, over the prime p.
LocalQuadExtension extension_from_json(const Json& payload, const Integer& p) {
  if (payload.contains("d")) {
    Rational d = rational_from_json(payload["d"], "d");
    if (d == 0) throw InputError("field 'd' must be nonzero");
    LocalQuadExtension ext = classify_extension(d, p);
    if (payload.contains("kind") && to_string(ext.kind) != payload["kind"].get<std::string>()) {
      throw InputError("d = " + to_string(d) + " gives a " + std::string(to_string(ext.kind)) +
                       " extension, not " + payload["kind"].get<std::string>());
    }
    return ext;
  }
  if (payload.contains("kind")) {
    if (!payload["kind"].is_string()) throw InputError("field 'kind' must be a string");
    return extension_of_kind(parse_extension_kind(payload["kind"].get<std::string>()), p);
  }
  throw InputError("an extension needs 'd' or 'kind'");
}

Integer prime_from_json(const Json& payload, const char* name) {
  Integer p = integer_from_json(field(payload, name), name);
  if (p < 2 || !is_prime(p)) throw InputError(std::string("field '") + name + "' must be a prime");
  return p;
}

Json consistency_json(const ConsistencyReport& r) {
  Json failures = Json::array();
  for (const Integer& l : r.witness_failures) failures.push_back(integer_to_json(l));
  return {{"consistent", r.consistent()},
          {"predicted", to_string(r.predicted)},
          {"observed", to_string(r.observed)},
          {"p_isomorphic_expected", r.p_isomorphic_expected},
          {"p_isomorphic_observed", r.p_isomorphic_observed},
          {"witness_failures", failures},
          {"issues", r.issues}};
}

Json motive_document(const Json& payload) {
  reject_unknown(payload, {"mode", "hodge_gap", "p", "extension", "q_B", "q_Z", "witness_primes"});
  MotiveDescriptor m;
  long gap = small_integer(payload, "hodge_gap");
  if (gap < 0 || gap > 1000000) throw InputError("field 'hodge_gap' must lie in [0, 10^6]");
  m.hodge_gap = static_cast<int>(gap);
  m.p = prime_from_json(payload, "p");
  if (payload.contains("extension")) m.extension = extension_from_json(payload["extension"], m.p);
  if (payload.contains("q_B")) {
    m.q_B = form_from_json(payload["q_B"], "q_B");
  } else {
    Rational sign = m.hodge_gap % 2 == 0 ? 1 : -1;
    m.q_B = BinaryForm::diagonal(sign, sign);
  }
  if (payload.contains("q_Z")) m.q_Z = form_from_json(payload["q_Z"], "q_Z");

  Json out = document_header("signature");
  out["mode"] = "motive";
  out["hodge_gap"] = m.hodge_gap;
  out["p"] = integer_to_json(m.p);
  out["extension"] = m.extension ? extension_json(*m.extension) : Json(nullptr);
  out["q_B"] = form_to_json(m.q_B);
  try {
    out["p_isomorphic"] = decide_p_isomorphic(m.hodge_gap, m.extension);
    out["predicted_definiteness"] = to_string(predict_definiteness(m));
    if (m.q_Z) {
      std::vector<Integer> witnesses;
      if (payload.contains("witness_primes")) {
        for (const Json& l : payload["witness_primes"]) {
          Integer prime = integer_from_json(l, "witness_primes");
          if (prime < 2 || !is_prime(prime)) throw InputError("witness " + prime.get_str() + " is not prime");
          witnesses.push_back(prime);
        }
      }
      out["q_Z"] = form_to_json(*m.q_Z);
      out["consistency"] = consistency_json(verify_qZ_when_known(m, witnesses));
    }
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
  return out;
}

Json rank2_document(const Json& payload) {
  reject_unknown(payload, {"mode", "charpoly", "q", "weight", "hodge_gap", "p", "extension"});
  IntPoly f;
  const Json& coeffs = field(payload, "charpoly");
  if (!coeffs.is_array()) throw InputError("field 'charpoly' must be an array");
  for (const Json& c : coeffs) f.push_back(integer_from_json(c, "charpoly"));
  Integer q = integer_from_json(field(payload, "q"), "q");
  long weight = payload.contains("weight") ? small_integer(payload, "weight") : 4;
  long gap = small_integer(payload, "hodge_gap");
  if (weight < 0 || weight > 64) throw InputError("field 'weight' must lie in [0, 64]");
  if (gap < 0 || gap > 1000000) throw InputError("field 'hodge_gap' must lie in [0, 10^6]");
  Json out = document_header("signature");
  out["mode"] = "rank2";
  try {
    Integer p = payload.contains("p") ? prime_from_json(payload, "p") : split_prime_power(q).p;
    std::optional<LocalQuadExtension> ext;
    if (payload.contains("extension")) ext = extension_from_json(payload["extension"], p);
    Rank2Verdict v = rank2_pathway(f, q, static_cast<int>(gap), p, static_cast<int>(weight), ext);
    out["rational_roots"] = v.rational_roots;
    out["verdict"] = v.rational_roots ? "algebraic" : "trivial";
    out["definiteness"] = v.definiteness ? Json(to_string(*v.definiteness)) : Json(nullptr);
    out["explanation"] = v.explanation;
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
  return out;
}

Json honda_tate_document(const Json& payload) {
  reject_unknown(payload, {"mode", "v_alpha", "v_q", "local_degree"});
  Json out = document_header("signature");
  out["mode"] = "honda_tate";
  try {
    Rational inv = honda_tate_invariant(rational_from_json(field(payload, "v_alpha"), "v_alpha"),
                                        rational_from_json(field(payload, "v_q"), "v_q"),
                                        small_integer(payload, "local_degree"));
    out["invariant"] = rational_to_json(inv);
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
  return out;
}

}  // namespace

Json analyze_document(const WeilRecord& record, const Config& config) {
  WeilPolynomial P = validated(record);
  if (P.degree() != 8) {
    throw InputError("degree must be 8 for analyze, got " + std::to_string(P.degree()));
  }
  FourfoldReport report;
  RootSystem roots;
  try {
    report = fourfold_signature_report(P, config.ladder, config.extension_depth);
    roots = conjugate_pairing(P, config.ladder);
  } catch (const CertificationError& err) {
    throw ResourceError(err.what());
  }
  const int digits = config.decimal_digits;

  Json out = document_header("analyze");
  out["record"] = to_json(record);
  out["genus"] = P.genus();
  out["slopes"] = slopes_json(P);
  Json root_list = Json::array();
  for (const RootValue& v : roots.values) {
    Json item = enclosure_json(v.enclosure, digits);
    item["multiplicity"] = v.multiplicity;
    item["conjugate"] = v.conjugate;
    root_list.push_back(std::move(item));
  }
  out["roots"] = std::move(root_list);
  out["rho1"] = report.rho1;
  out["rho2_tate"] = report.rho2_tate;
  out["exotic_count"] = report.exotic_count();

  Json subsets = Json::array();
  for (const CertifiedSubset& s : report.exotic.subsets) {
    Json values = Json::array();
    for (std::size_t id = 0; id < s.values.size(); ++id) {
      if (s.values[id] == 0) continue;
      Json item = enclosure_json(report.exotic.roots.values[id].enclosure, digits);
      item["count"] = s.values[id];
      values.push_back(std::move(item));
    }
    Json product = enclosure_json(s.certificate.enclosure, digits);
    product["target"] = integer_to_json(s.certificate.target);
    product["exact_index_count"] = s.certificate.exact_index_count;
    product["precision_bits"] = s.certificate.precision_bits;
    subsets.push_back({{"values", std::move(values)},
                       {"product", std::move(product)},
                       {"stable", s.stable()},
                       {"breaks_at_power", s.breaks_at_power ? Json(*s.breaks_at_power) : Json(nullptr)}});
  }
  out["exotic_subsets"] = std::move(subsets);

  const StructureReport& st = report.structure;
  out["structure"] = {{"stable_count", st.stable_count},
                      {"count_in_range", st.count_in_range},
                      {"conjugation_free", st.conjugation_free},
                      {"no_pair_meets_in_two", st.no_pair_meets_in_two},
                      {"four_case_ok", st.four_case_ok ? Json(*st.four_case_ok) : Json(nullptr)},
                      {"violations", st.violations},
                      {"passed", st.passed()}};
  out["predicted_signature"] = {{"s_plus", report.predicted_signature.s_plus},
                                {"s_minus", report.predicted_signature.s_minus}};
  auto flag = [](bool conditional) { return conditional ? "tate_conditional" : "unconditional"; };
  out["conditionality"] = {{"rho1", flag(report.flags.rho1_conditional)},
                           {"rho2_tate", flag(report.flags.rho2_conditional)},
                           {"predicted_signature", flag(report.flags.signature_conditional)}};
  out["extension_depth"] = config.extension_depth;
  return out;
}

bool has_structure_violation(const Json& analyze) {
  return analyze.contains("structure") && !analyze["structure"]["passed"].get<bool>();
}

void check_enumeration_bounds(const Integer& q, int g, const Config& config) {
  if (g < 1) throw InputError("genus must be positive, got " + std::to_string(g));
  try {
    split_prime_power(q);
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
  if (q > config.max_q) {
    throw ResourceError("q = " + q.get_str() + " exceeds the configured bound max_q = " +
                        std::to_string(config.max_q));
  }
  if (g > config.max_g) {
    throw ResourceError("g = " + std::to_string(g) + " exceeds the configured bound max_g = " +
                        std::to_string(config.max_g));
  }
}

std::vector<WeilRecord> enumerate_records(const Integer& q, int g, std::optional<int> max_factor_genus,
                                          const Config& config) {
  check_enumeration_bounds(q, g, config);
  if (max_factor_genus && *max_factor_genus < 1) throw InputError("factor genus must be positive");
  std::vector<WeilPolynomial> polys = max_factor_genus
                                          ? enumerate_split(q, g, *max_factor_genus, config.jobs)
                                          : enumerate_weil(q, g, config.jobs);
  std::vector<WeilRecord> out;
  out.reserve(polys.size());
  for (const WeilPolynomial& P : polys) out.push_back(record_of(P));
  return out;
}

Json forms_document(const Json& payload) {
  reject_unknown(payload, {"q1", "q2", "places"});
  BinaryForm q1 = form_from_json(field(payload, "q1"), "q1");
  BinaryForm q2 = form_from_json(field(payload, "q2"), "q2");
  std::vector<Place> places;
  if (payload.contains("places")) {
    if (!payload["places"].is_array()) throw InputError("field 'places' must be an array");
    for (const Json& v : payload["places"]) places.push_back(place_from_json(v));
  } else {
    Diagonalization a = diagonalize(q1);
    Diagonalization b = diagonalize(q2);
    places = hilbert_support({a.d1, a.d2, b.d1, b.d2});
  }

  auto local = [](const BinaryForm& f, const Place& v) {
    LocalInvariantRecord r = local_invariants(f, v);
    return Json{{"epsilon", r.epsilon}, {"disc_class", rational_to_json(r.disc_class.representative)}};
  };
  Json out = document_header("forms");
  out["q1"] = form_to_json(q1);
  out["q2"] = form_to_json(q2);
  Json rows = Json::array();
  bool all = true;
  for (const Place& v : places) {
    bool iso = locally_isomorphic(q1, q2, v);
    all = all && iso;
    rows.push_back({{"place", v.to_string()}, {"q1", local(q1, v)}, {"q2", local(q2, v)}, {"isomorphic", iso}});
  }
  out["places"] = std::move(rows);
  out["isomorphic_at_all_listed"] = all;
  out["product_formula"] = {{"q1", product_formula_check(q1)}, {"q2", product_formula_check(q2)}};
  out["definiteness"] = {{"q1", to_string(definiteness(q1))}, {"q2", to_string(definiteness(q2))}};
  return out;
}

Json norm_document(const Json& payload) {
  reject_unknown(payload, {"x", "d", "kind", "p", "i"});
  if (!payload.contains("x") && !payload.contains("i")) throw InputError("norm needs 'x' or 'i'");
  Integer p = payload.contains("p") ? prime_from_json(payload, "p") : Integer(2);
  Json out = document_header("norm");
  try {
    LocalQuadExtension ext = extension_from_json(payload, p);
    out["extension"] = extension_json(ext);
    if (payload.contains("x")) {
      Rational x = rational_from_json(payload["x"], "x");
      if (x == 0) throw InputError("field 'x' must be nonzero");
      out["x"] = rational_to_json(x);
      out["hilbert_symbol"] = hilbert(x, ext.d, Place::finite(p));
      out["is_norm"] = is_norm(x, ext);
    }
    if (payload.contains("i")) {
      long i = small_integer(payload, "i");
      if (i < 0 || i > 100000) throw InputError("field 'i' must lie in [0, 10^5]");
      out["i"] = i;
      if (i >= 1) {
        Rational cls = period_norm_class(static_cast<int>(i), ext);
        out["period_norm_class"] = rational_to_json(cls);
        out["period_class_is_norm"] = is_norm(cls, ext);
      }
      bool iso = decide_p_isomorphic(static_cast<int>(i), ext);
      out["p_isomorphic"] = iso;
      out["parity_holds"] = iso == (i % 2 == 0);
    }
  } catch (const DomainError& err) {
    throw InputError(err.what());
  }
  return out;
}

Json signature_document(const Json& payload) {
  if (!payload.is_object()) throw InputError("payload must be a JSON object");
  std::string mode = payload.contains("mode") ? payload["mode"].get<std::string>() : "motive";
  if (mode == "motive") return motive_document(payload);
  if (mode == "rank2") return rank2_document(payload);
  if (mode == "honda_tate") return honda_tate_document(payload);
  throw InputError("unknown signature mode '" + mode + "'");
}

Json selftest_document(const Config& config) {
  Json checks = Json::array();
  bool passed = true;
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"passed", ok}});
    passed = passed && ok;
  };
  auto safely = [&](const std::string& name, auto&& body) {
    try {
      check(name, body());
    } catch (const std::exception& err) {
      checks.push_back({{"name", name}, {"passed", false}, {"error", err.what()}});
      passed = false;
    }
  };

  safely("hilbert(-9,-1)_2 = -1", [] { return hilbert(-9, -1, Place::finite(2)) == -1; });
  safely("hilbert(-9,3)_2 = -1", [] { return hilbert(-9, 3, Place::finite(2)) == -1; });
  safely("1/p is not a norm from the unramified extension", [] {
    for (long p : {2, 3, 5, 7, 11}) {
      if (is_norm(Rational(1, p), extension_of_kind(ExtensionKind::unramified, p))) return false;
    }
    return true;
  });
  safely("p-adic isomorphy iff the Hodge gap is even", [] {
    for (auto kind : {ExtensionKind::unramified, ExtensionKind::tame_ramified,
                      ExtensionKind::wild_Q2_sqrt_minus1, ExtensionKind::wild_Q2_sqrt3}) {
      for (int i = 1; i <= 6; ++i) {
        if (decide_p_isomorphic(i, extension_of_kind(kind, 2)) != (i % 2 == 0)) return false;
      }
    }
    return true;
  });
  safely("(x^2+2)^4: rho1 16, rho2 38, 2 exotic subsets, signature (23;15)", [&] {
    IntPoly f{1};
    for (int k = 0; k < 4; ++k) f = poly::mul(f, IntPoly{2, 0, 1});
    FourfoldReport r = fourfold_signature_report(validate_weil(f, 2), config.ladder, config.extension_depth);
    return r.rho1 == 16 && r.rho2_tate == 38 && r.exotic_count() == 2 &&
           r.predicted_signature == SignaturePair{23, 15} && r.structure.passed();
  });
  safely("elliptic isogeny classes: 5 over F_2, 7 over F_3", [] {
    return enumerate_weil(2, 1).size() == 5 && enumerate_weil(3, 1).size() == 7;
  });

  Json out = document_header("selftest");
  out["checks"] = std::move(checks);
  out["passed"] = passed;
  return out;
}

}  // namespace hodgesig::io
