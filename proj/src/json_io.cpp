#include "flatcheck/json_io.hpp"

namespace flatcheck {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw InputError("field '" + field + "': " + why);
}

std::int64_t get_int(const json& j, const std::string& field) {
  if (!j.contains(field)) bad_field(field, "missing");
  if (!j[field].is_number_integer()) bad_field(field, "expected an integer");
  return j[field].get<std::int64_t>();
}

}  // namespace

json ring_to_json(const Ring& R) {
  json j;
  switch (R.kind()) {
    case RingKind::Zmod:
      j["kind"] = "zmod";
      j["n"] = R.zmod_n();
      break;
    case RingKind::PolyQuotient:
      j["kind"] = "poly_quotient";
      j["p"] = R.poly_p();
      j["f"] = R.poly_modulus();
      break;
    case RingKind::Product: {
      j["kind"] = "product";
      json factors = json::array();
      for (const auto& f : R.factors()) factors.push_back(ring_to_json(f));
      j["factors"] = std::move(factors);
      break;
    }
    case RingKind::Seq:
      j["kind"] = "seq";
      j["base"] = ring_to_json(R.seq_base());
      break;
  }
  return j;
}

Ring ring_from_json(const json& j) {
  if (!j.is_object()) bad_field("ring", "expected an object");
  if (!j.contains("kind") || !j["kind"].is_string()) bad_field("kind", "missing or not a string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "zmod") return Ring::zmod(get_int(j, "n"));
  if (kind == "poly_quotient") {
    const std::int64_t p = get_int(j, "p");
    if (!j.contains("f") || !j["f"].is_array()) bad_field("f", "expected an integer array");
    std::vector<std::int64_t> f;
    for (const auto& c : j["f"]) {
      if (!c.is_number_integer()) bad_field("f", "expected integer coefficients");
      f.push_back(c.get<std::int64_t>());
    }
    return Ring::poly_quotient(p, std::move(f));
  }
  if (kind == "product") {
    if (!j.contains("factors") || !j["factors"].is_array())
      bad_field("factors", "expected an array of rings");
    std::vector<Ring> factors;
    for (const auto& f : j["factors"]) factors.push_back(ring_from_json(f));
    return Ring::product(std::move(factors));
  }
  if (kind == "seq") {
    if (!j.contains("base")) bad_field("base", "missing");
    return Ring::seq(ring_from_json(j["base"]));
  }
  bad_field("kind", "unknown ring kind '" + kind + "'");
}

json elem_to_json(const Ring& R, const Elem& e) {
  switch (R.kind()) {
    case RingKind::Zmod:
      return e.residue_value();
    case RingKind::PolyQuotient:
      return e.coeff_values();
    case RingKind::Product: {
      json arr = json::array();
      for (std::size_t i = 0; i < R.factors().size(); ++i)
        arr.push_back(elem_to_json(R.factors()[i], e.tuple_parts()[i]));
      return arr;
    }
    case RingKind::Seq: {
      json j;
      json prefix = json::array();
      for (std::size_t i = 0; i < e.seq_prefix_len(); ++i)
        prefix.push_back(elem_to_json(R.seq_base(), e.seq_coordinate(i)));
      j["prefix"] = std::move(prefix);
      j["tail"] = elem_to_json(R.seq_base(), e.seq_tail());
      return j;
    }
  }
  throw Error("bad ring kind");
}

Elem elem_from_json(const Ring& R, const json& j) {
  Elem e;
  switch (R.kind()) {
    case RingKind::Zmod: {
      if (!j.is_number_integer()) bad_field("element", "expected an integer residue");
      e = Elem::residue(j.get<std::int64_t>());
      break;
    }
    case RingKind::PolyQuotient: {
      if (!j.is_array()) bad_field("element", "expected a coefficient array");
      std::vector<std::int64_t> c;
      for (const auto& x : j) {
        if (!x.is_number_integer()) bad_field("element", "expected integer coefficients");
        c.push_back(x.get<std::int64_t>());
      }
      e = Elem::coeffs(std::move(c));
      break;
    }
    case RingKind::Product: {
      if (!j.is_array() || j.size() != R.factors().size())
        bad_field("element", "expected one entry per product factor");
      std::vector<Elem> parts;
      for (std::size_t i = 0; i < R.factors().size(); ++i)
        parts.push_back(elem_from_json(R.factors()[i], j[i]));
      e = Elem::tuple(std::move(parts));
      break;
    }
    case RingKind::Seq: {
      if (!j.is_object() || !j.contains("prefix") || !j.contains("tail"))
        bad_field("element", "expected {\"prefix\":[...],\"tail\":...}");
      std::vector<Elem> prefix;
      for (const auto& x : j["prefix"])
        prefix.push_back(elem_from_json(R.seq_base(), x));
      e = Elem::seq(std::move(prefix), elem_from_json(R.seq_base(), j["tail"]));
      break;
    }
  }
  if (!R.is_canonical(e))
    bad_field("element", "not canonical in " + R.describe());
  return e;
}

json ideal_to_json(const Ideal& I) {
  json j;
  j["ring"] = ring_to_json(I.ring);
  if (I.body == IdealBody::FiniteSupport) {
    j["body"] = "finite_support";
  } else {
    j["body"] = "generators";
    json gens = json::array();
    for (const auto& g : I.gens) gens.push_back(elem_to_json(I.ring, g));
    j["generators"] = std::move(gens);
  }
  return j;
}

json module_to_json(const PresentedModule& M) {
  json j;
  j["ring"] = ring_to_json(M.ring());
  j["generators"] = M.generators();
  json rels = json::array();
  for (const auto& rel : M.relations()) {
    json v = json::array();
    for (const auto& e : rel) v.push_back(elem_to_json(M.ring(), e));
    rels.push_back(std::move(v));
  }
  j["relations"] = std::move(rels);
  return j;
}

PresentedModule module_from_json(const json& j) {
  if (!j.is_object()) bad_field("module", "expected an object");
  if (!j.contains("ring")) bad_field("ring", "missing");
  Ring R = ring_from_json(j["ring"]);
  const std::int64_t k = get_int(j, "generators");
  if (k < 0) bad_field("generators", "must be non-negative");
  if (!j.contains("relations") || !j["relations"].is_array())
    bad_field("relations", "expected an array of vectors");
  std::vector<ModVec> rels;
  for (const auto& rv : j["relations"]) {
    if (!rv.is_array() || rv.size() != static_cast<std::size_t>(k))
      bad_field("relations", "each relation needs one entry per generator");
    ModVec v;
    for (const auto& x : rv) v.push_back(elem_from_json(R, x));
    rels.push_back(std::move(v));
  }
  return PresentedModule(std::move(R), static_cast<std::size_t>(k),
                         std::move(rels));
}

json prime_site_to_json(const PrimeSite& site) {
  json j;
  j["factor_index"] = site.factor_index;
  json gens = json::array();
  for (const auto& g : site.prime.gens) gens.push_back(elem_to_json(site.ring, g));
  j["prime_generators"] = std::move(gens);
  return j;
}

json rank_map_to_json(const RankMap& rm) {
  json arr = json::array();
  const auto& sites = prime_sites(rm.ring);
  for (std::size_t i = 0; i < rm.ranks.size(); ++i) {
    json entry = prime_site_to_json(sites[i]);
    entry["rank"] = rm.ranks[i];
    arr.push_back(std::move(entry));
  }
  return arr;
}

json flatness_to_json(const Ring& R, const FlatnessReport& fr) {
  json j;
  j["flat"] = fr.flat;
  j["ideals_checked"] = fr.ideals_checked;
  if (fr.failing_ideal) {
    json gens = json::array();
    for (const auto& g : fr.failing_ideal->gens)
      gens.push_back(elem_to_json(R, g));
    j["failing_ideal"] = std::move(gens);
    j["tensor_count"] = fr.tensor_count;
    j["image_count"] = fr.image_count;
  }
  return j;
}

json verdict_to_json(const ProjectivityVerdict& v) {
  json j;
  j["status"] = v.projective ? "projective" : "not_projective";
  if (!v.projective) j["reason"] = v.reason;
  if (v.rank_map) j["rank_map"] = rank_map_to_json(*v.rank_map);
  json ev = json::array();
  for (const auto& c : v.evidence) {
    json e;
    e["condition"] = c.name;
    e["holds"] = c.holds;
    if (!c.detail.empty()) e["detail"] = c.detail;
    ev.push_back(std::move(e));
  }
  j["evidence"] = std::move(ev);
  return j;
}

json pointwise_to_json(const PointwiseLocalization& pl) {
  json j;
  j["schema"] = kSchemaTag;
  j["source"] = ring_to_json(pl.source);
  json subset = json::array();
  for (const auto& s : pl.subset) subset.push_back(elem_to_json(pl.source, s));
  j["subset"] = std::move(subset);
  j["result"] = ring_to_json(pl.result);
  json eta = json::array();
  for (std::uint64_t x = 0; x < pl.source.size(); ++x)
    eta.push_back(elem_to_json(pl.result, pl.eta.apply(pl.source.element_at(x))));
  j["eta"] = std::move(eta);
  json inv = json::array();
  for (const auto& e : pl.inverses) inv.push_back(elem_to_json(pl.result, e));
  j["inverses"] = std::move(inv);
  return j;
}

json certificate_to_json(const Example1Certificate& cert) {
  json j;
  j["schema"] = kSchemaTag;
  j["base"] = ring_to_json(cert.base);
  j["adaptation"] = cert.adaptation;
  json samples = json::array();
  for (const auto& t : cert.flat_samples) {
    json s;
    s["f"] = elem_to_json(cert.seq_ring, t.f);
    s["g"] = elem_to_json(cert.seq_ring, t.g);
    s["h"] = elem_to_json(cert.seq_ring, t.h);
    samples.push_back(std::move(s));
  }
  j["flat_samples"] = std::move(samples);
  json refs = json::array();
  for (const auto& r : cert.refutations) {
    json e;
    e["e"] = elem_to_json(cert.seq_ring, r.candidate);
    e["reason"] = r.kind == RefutationKind::NotInIdeal ? "not_in_ideal" : "too_small";
    if (r.witness) e["witness"] = elem_to_json(cert.seq_ring, *r.witness);
    if (r.coordinate) e["coordinate"] = *r.coordinate;
    refs.push_back(std::move(e));
  }
  j["refutations"] = std::move(refs);
  json cases;
  cases["tail_nonzero"] = {{"description", cert.tail_nonzero_case.description},
                           {"instances", cert.tail_nonzero_case.instances_checked},
                           {"verified", cert.tail_nonzero_case.verified}};
  cases["tail_zero"] = {{"description", cert.tail_zero_case.description},
                        {"instances", cert.tail_zero_case.instances_checked},
                        {"verified", cert.tail_zero_case.verified}};
  j["structural_argument"] = std::move(cases);
  j["status"] = cert.valid ? "VALID" : "INVALID";
  return j;
}

}  // namespace flatcheck
