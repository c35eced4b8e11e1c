#include "modrad/json_io.hpp"

namespace modrad::json_io {

using rings::IdealDescriptor;
using rings::PrimeSet;
using rings::RingDescriptor;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("invalid JSON: " + text.substr(0, 120));
  return j;
}

json int_to_json(const Int& x) {
  if (x.fits_int64()) return json(x.to_int64());
  return json(x.str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError("not a decimal integer: " + j.dump());
    }
  }
  throw ParseError("expected an integer (number or decimal string), got " + j.dump());
}

json ring_to_json(const RingDescriptor& r) {
  switch (r.kind()) {
    case rings::RingKind::Integers: return json{{"kind", "Z"}};
    case rings::RingKind::IntegersModN: return json{{"kind", "ZmodN"}, {"n", int_to_json(r.modulus())}};
    case rings::RingKind::LocalizedAtPrime: return json{{"kind", "ZlocP"}, {"p", int_to_json(r.modulus())}};
    case rings::RingKind::PrimeField: return json{{"kind", "Fp"}, {"p", int_to_json(r.modulus())}};
  }
  throw std::logic_error("unreachable");
}

RingDescriptor ring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw ParseError("ring: expected {\"kind\": ...}, got " + j.dump());
  }
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "Z") return RingDescriptor::integers();
    if (kind == "ZmodN") return RingDescriptor::integers_mod(int_from_json(j.at("n")));
    if (kind == "ZlocP") return RingDescriptor::localized_at(int_from_json(j.at("p")));
    if (kind == "Fp") return RingDescriptor::prime_field(int_from_json(j.at("p")));
  } catch (const json::exception&) {
    throw ParseError("ring: missing parameter in " + j.dump());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("ring: ") + e.what());
  }
  throw ParseError("ring: unknown kind \"" + kind + "\"");
}

json ideal_to_json(const IdealDescriptor& i) {
  return json{{"gen", int_to_json(i.generator())}};
}

IdealDescriptor ideal_from_json(const RingDescriptor& ring, const json& j) {
  if (j.is_object() && j.contains("gen")) {
    return IdealDescriptor::from_generator(ring, int_from_json(j.at("gen")));
  }
  // A bare integer is accepted as the generator.
  if (j.is_number_integer() || j.is_string()) {
    return IdealDescriptor::from_generator(ring, int_from_json(j));
  }
  throw ParseError("ideal: expected {\"gen\": g}, got " + j.dump());
}

json prime_set_to_json(const PrimeSet& s) {
  json gens = json::array();
  for (const Int& g : s.gens()) gens.push_back(int_to_json(g));
  if (s.is_cofinite()) return json{{"cofinite_except", gens}};
  return gens;
}

PrimeSet prime_set_from_json(const RingDescriptor& ring, const json& j) {
  try {
    if (j.is_array()) {
      std::vector<Int> gens;
      for (const auto& g : j) gens.push_back(int_from_json(g));
      return PrimeSet::finite(ring, std::move(gens));
    }
    if (j.is_object() && j.contains("cofinite_except")) {
      std::vector<Int> gens;
      for (const auto& g : j.at("cofinite_except")) gens.push_back(int_from_json(g));
      return PrimeSet::cofinite_maximals(ring, std::move(gens));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("prime set: ") + e.what());
  }
  throw ParseError("prime set: expected [p,...] or {\"cofinite_except\": [...]}, got " + j.dump());
}

namespace {

json matrix_rows_to_json(const exactlin::IntMatrix& cols_as_vectors) {
  // Vectors are serialized row-wise: one JSON array per column vector.
  json rows = json::array();
  for (exactlin::Index c = 0; c < cols_as_vectors.cols(); ++c) {
    json row = json::array();
    for (exactlin::Index i = 0; i < cols_as_vectors.rows(); ++i) {
      row.push_back(int_to_json(cols_as_vectors(i, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

exactlin::IntMatrix vectors_from_json(exactlin::Index ambient, const json& j,
                                      const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of vectors");
  exactlin::IntMatrix m(ambient, static_cast<exactlin::Index>(j.size()));
  exactlin::Index c = 0;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<exactlin::Index>(row.size()) != ambient) {
      throw ParseError(std::string(what) + ": vector length must equal \"gens\"");
    }
    exactlin::Index i = 0;
    for (const auto& v : row) m(i++, c) = int_from_json(v);
    ++c;
  }
  return m;
}

}  // namespace

json lattice_to_json(const exactlin::IntegerLattice& l) {
  return matrix_rows_to_json(l.basis());
}

json module_to_json(const ModuleHandle& m) {
  if (std::holds_alternative<fgmod::FinPresModule>(m)) {
    const auto& fp = std::get<fgmod::FinPresModule>(m);
    return json{{"ring", ring_to_json(fp.ring())},
                {"kind", "finpres"},
                {"gens", fp.n_gens()},
                {"relations", matrix_rows_to_json(fp.relations().basis())}};
  }
  const auto& sm = std::get<symmod::SymbolicModule>(m);
  json cyclics = json::array();
  for (const auto& c : sm.cyclics()) {
    cyclics.push_back(json{{"p", int_to_json(c.prime)}, {"k", c.exponent}, {"mult", c.multiplicity}});
  }
  json families = json::array();
  for (const auto& f : sm.families()) {
    families.push_back(json{{"primes", prime_set_to_json(f.primes)}});
  }
  json pruefer = json::array();
  for (const auto& p : sm.pruefer()) {
    pruefer.push_back(json{{"p", int_to_json(p.prime)}, {"mult", p.multiplicity}});
  }
  json free_rank = sm.free_rank().infinite ? json("inf") : json(sm.free_rank().count);
  return json{{"ring", ring_to_json(sm.ring())}, {"kind", "symbolic"},
              {"free_rank", free_rank},         {"cyclics", cyclics},
              {"families", families},           {"pruefer", pruefer}};
}

ModuleHandle module_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("kind")) {
    throw ParseError("module: expected {\"ring\":..., \"kind\":...}");
  }
  RingDescriptor ring = ring_from_json(j.at("ring"));
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "finpres") {
      auto gens = j.at("gens").get<std::int64_t>();
      if (gens < 0) throw ParseError("module: \"gens\" must be >= 0");
      exactlin::IntMatrix rel = vectors_from_json(gens, j.value("relations", json::array()),
                                                  "relations");
      return fgmod::FinPresModule(ring, gens, rel);
    }
    if (kind == "symbolic") {
      symmod::FreeRank fr = symmod::FreeRank::finite(0);
      if (j.contains("free_rank")) {
        const json& f = j.at("free_rank");
        if (f.is_string() && (f.get<std::string>() == "inf")) {
          fr = symmod::FreeRank::countably_infinite();
        } else if (f.is_number_integer() && f.get<std::int64_t>() >= 0) {
          fr = symmod::FreeRank::finite(f.get<std::uint64_t>());
        } else {
          throw ParseError("module: \"free_rank\" must be a count or \"inf\"");
        }
      }
      std::vector<symmod::CyclicPart> cyclics;
      for (const auto& c : j.value("cyclics", json::array())) {
        cyclics.push_back({int_from_json(c.at("p")),
                           c.value("k", std::uint32_t{1}),
                           c.value("mult", std::uint32_t{1})});
      }
      std::vector<symmod::FamilyPart> families;
      for (const auto& f : j.value("families", json::array())) {
        families.push_back({prime_set_from_json(ring, f.at("primes"))});
      }
      std::vector<symmod::PrueferPart> pruefer;
      for (const auto& p : j.value("pruefer", json::array())) {
        pruefer.push_back({int_from_json(p.at("p")), p.value("mult", std::uint32_t{1})});
      }
      return symmod::SymbolicModule(ring, fr, std::move(cyclics), std::move(families),
                                    std::move(pruefer));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("module: malformed field (") + e.what() + ")");
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("module: ") + e.what());
  }
  throw ParseError("module: unknown kind \"" + kind + "\"");
}

ModuleHandle module_from_string(const std::string& text) {
  return module_from_json(parse(text));
}

fgmod::Submodule submodule_from_json(const fgmod::FinPresModule& parent, const json& j) {
  if (!j.is_object() || !j.contains("gens")) {
    throw ParseError("submodule: expected {\"gens\": [[...],...]}");
  }
  return fgmod::Submodule(parent, vectors_from_json(parent.n_gens(), j.at("gens"), "submodule"));
}

json submodule_to_json(const fgmod::Submodule& n) {
  return json{{"gens", matrix_rows_to_json(n.lattice().basis())}};
}

json certificate_to_json(const fgmod::PropertyCertificate& c) {
  json evidence = json::array();
  for (const auto& e : c.per_prime) {
    json entry{{"prime", ideal_to_json(e.prime)}, {"ok", e.ok}, {"detail", e.detail}};
    if (e.witness) entry["witness"] = lattice_to_json(*e.witness);
    evidence.push_back(std::move(entry));
  }
  json out{{"verdict", c.verdict}, {"per_prime", evidence}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

json realized_to_json(const rings::RealizedPrimes& r) {
  return json{{"zero_prime", r.zero_prime}, {"maximals", prime_set_to_json(r.maximals)}};
}

}  // namespace modrad::json_io
