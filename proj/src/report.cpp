#include "flatcheck/report.hpp"

#include <chrono>
#include <sstream>

namespace flatcheck {

AnalysisReport analyze_module(const PresentedModule& M,
                              std::size_t max_exterior) {
  const auto start = std::chrono::steady_clock::now();
  const Ring& R = M.ring();
  json j;
  j["schema"] = kSchemaTag;
  j["ring"] = ring_to_json(R);
  j["module"] = module_to_json(M);
  j["cardinality"] = M.size();

  {
    const Ideal ann = annihilator(M);
    json a;
    json gens = json::array();
    for (const auto& g : ann.gens) gens.push_back(elem_to_json(R, g));
    a["generators"] = std::move(gens);
    a["idempotent"] = is_idempotent_ideal(R, ann);
    if (auto e = try_idempotent_generator(ann))
      a["idempotent_generator"] = elem_to_json(R, *e);
    j["annihilator"] = std::move(a);
  }

  {
    json factors = json::array();
    const std::size_t top = std::min(max_exterior, M.generators());
    for (std::size_t n = 1; n <= top; ++n) {
      const Ideal in = invariant_factor(M, n);
      json f;
      f["n"] = n;
      json gens = json::array();
      for (const auto& g : in.gens) gens.push_back(elem_to_json(R, g));
      f["generators"] = std::move(gens);
      f["idempotent"] = is_idempotent_ideal(R, in);
      if (auto e = try_idempotent_generator(in))
        f["idempotent_generator"] = elem_to_json(R, *e);
      factors.push_back(std::move(f));
    }
    j["invariant_factors"] = std::move(factors);
  }

  j["flatness"] = flatness_to_json(R, flatness_report(M));
  if (flatness_oracle(M)) j["rank_map"] = rank_map_to_json(rank_map(M));
  j["projectivity"] = verdict_to_json(is_projective(M));

  AnalysisReport report;
  report.document = std::move(j);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string render_analysis_text(const json& d) {
  std::ostringstream os;
  os << "ring: " << d["ring"].dump() << "\n";
  os << "module: " << d["module"]["generators"].get<std::size_t>()
     << " generator(s), " << d["module"]["relations"].size()
     << " relation(s), cardinality " << d["cardinality"].get<std::uint64_t>()
     << "\n";
  os << "annihilator: generators " << d["annihilator"]["generators"].dump()
     << (d["annihilator"]["idempotent"].get<bool>() ? " (idempotent"
                                                    : " (not idempotent");
  if (d["annihilator"].contains("idempotent_generator"))
    os << ", generator " << d["annihilator"]["idempotent_generator"].dump();
  os << ")\n";
  for (const auto& f : d["invariant_factors"]) {
    os << "I_" << f["n"].get<std::size_t>() << ": " << f["generators"].dump()
       << (f["idempotent"].get<bool>() ? " idempotent" : " not idempotent");
    if (f.contains("idempotent_generator"))
      os << ", generator " << f["idempotent_generator"].dump();
    os << "\n";
  }
  const bool flat = d["flatness"]["flat"].get<bool>();
  os << "flat: " << (flat ? "yes" : "no") << " ("
     << d["flatness"]["ideals_checked"].get<std::size_t>() << " ideals checked";
  if (!flat)
    os << "; failing ideal " << d["flatness"]["failing_ideal"].dump()
       << ", |J(x)M| = " << d["flatness"]["tensor_count"].get<std::uint64_t>()
       << ", |JM| = " << d["flatness"]["image_count"].get<std::uint64_t>();
  os << ")\n";
  if (d.contains("rank_map")) {
    os << "rank map:";
    for (const auto& e : d["rank_map"])
      os << " [site " << e["factor_index"].get<std::size_t>() << ", prime "
         << e["prime_generators"].dump() << "] -> "
         << e["rank"].get<std::size_t>();
    os << "\n";
  }
  os << "projective: "
     << (d["projectivity"]["status"].get<std::string>() == "projective" ? "yes"
                                                                        : "no");
  if (d["projectivity"].contains("reason"))
    os << " (" << d["projectivity"]["reason"].get<std::string>() << ")";
  os << "\n";
  return os.str();
}

}  // namespace flatcheck
