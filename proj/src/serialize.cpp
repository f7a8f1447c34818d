#include "knotadj/serialize.hpp"

namespace knotadj {

using nlohmann::json;

json laurent_to_json(const Laurent& p) { return json(p.term_list()); }

Laurent laurent_from_json(const json& j, char var) {
  if (!j.is_array()) throw Error("polynomial term list must be an array");
  return Laurent::from_term_list(j.get<std::vector<std::string>>(), var);
}

json fraction_to_json(const Fraction& f) {
  // Decimal strings: tower vertices outgrow 64-bit integers.
  return json{{"p", f.p.str()}, {"q", f.q.str()}};
}

Fraction fraction_from_json(const json& j) {
  try {
    return Fraction{BigInt(j.at("p").get<std::string>()),
                    BigInt(j.at("q").get<std::string>())};
  } catch (const std::exception&) {
    throw Error("malformed fraction object");
  }
}

json fingerprint_to_json(const Fingerprint& fp) {
  json j;
  j["components"] = fp.components;
  if (fp.fraction) j["fraction"] = fraction_to_json(*fp.fraction);
  if (fp.determinant) j["determinant"] = fp.determinant->str();
  if (fp.jones) j["jones"] = laurent_to_json(*fp.jones);
  if (fp.alexander) j["alexander"] = laurent_to_json(*fp.alexander);
  if (fp.genus) j["genus"] = *fp.genus;
  return j;
}

json witness_to_json(const AdjacencyWitness& w) {
  json j;
  j["base_word"] = format_braid_word(w.base_word);
  j["family_word"] = format_braid_word(w.family_word);
  j["params"] = {{"m", w.params.m}, {"n", w.params.n}};
  j["sites"] = {{{"syllable", w.site_m.syllable}, {"order", -w.params.m}},
                {{"syllable", w.site_n.syllable}, {"order", -w.params.n}}};
  j["base_fingerprint"] = fingerprint_to_json(w.base_fp);
  j["surgered_fingerprints"] = {{"first", fingerprint_to_json(w.surgered_m)},
                                {"second", fingerprint_to_json(w.surgered_n)},
                                {"both", fingerprint_to_json(w.surgered_both)}};
  j["verdict"] = w.verdict;
  j["cosmetic"] = to_string(w.cosmetic);
  return j;
}

}  // namespace knotadj
