#include "latkit_io.hpp"

#include <fstream>

#include "latkit/curated_orders.hpp"
#include "latkit/error.hpp"
#include "latkit/named_lattices.hpp"

namespace latkit::io {

namespace {

const Int& json_safe_bound() {
  static const Int bound = Int(1) << 53;
  return bound;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

unsigned long unsigned_from_json(const json& j, const char* what) {
  const Int x = int_from_json(j);
  if (sgn(x) < 0 || !x.fits_ulong_p()) throw InvalidInput(std::string(what) + " must be a small nonnegative integer");
  return x.get_ui();
}

NumberRing ring_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "integers") return NumberRing::integers();
  if (j.is_object() && j.contains("quadratic")) {
    const auto tn = int_vector_from_json(j.at("quadratic"));
    if (tn.size() != 2) throw InvalidInput("quadratic ring needs [t, n]");
    return NumberRing::quadratic(tn[0], tn[1]);
  }
  if (j.is_object() && j.contains("table")) {
    NumberRing r;
    r.degree = unsigned_from_json(require(j, "degree"), "degree");
    r.table = int_vector_from_json(j.at("table"));
    if (r.degree == 0 || r.table.size() != r.degree * r.degree * r.degree)
      throw InvalidInput("ring table must have degree^3 entries");
    return r;
  }
  throw InvalidInput("ring must be \"integers\", {\"quadratic\": [t, n]} or {\"degree\", \"table\"}");
}

OrderBlock block_from_json(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "matrix") {
    const NumberRing ring = j.contains("ring") ? ring_from_json(j.at("ring")) : NumberRing::integers();
    return OrderBlock::matrix(ring, unsigned_from_json(require(j, "r"), "r"));
  }
  if (kind == "quaternion") {
    const IntMatrix basis = j.contains("basis") ? matrix_from_json(j.at("basis")) : IntMatrix::identity(4);
    const Int den = j.contains("denominator") ? int_from_json(j.at("denominator")) : Int(1);
    return OrderBlock::quaternion(int_from_json(require(j, "a")), int_from_json(require(j, "b")), basis, den);
  }
  throw InvalidInput("block kind must be \"matrix\" or \"quaternion\"");
}

}  // namespace

json to_json(const Int& x) {
  if (abs(x) <= json_safe_bound()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const std::vector<Int>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(j.get<unsigned long>());
    return Int(j.get<long>());
  }
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (d != static_cast<double>(static_cast<long>(d))) throw InvalidInput("expected an integer, got " + j.dump());
    return Int(static_cast<long>(d));
  }
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("not a decimal integer: " + j.dump());
    return x;
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

std::vector<Int> int_vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of integers");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("expected a nonempty array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) rows.push_back(int_vector_from_json(r));
  const std::size_t cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("matrix rows have different lengths");
    m.set_row(i, rows[i]);
  }
  return m;
}

std::vector<IntMatrix> matrices_from_json(const json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of matrices");
  std::vector<IntMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + path.string() + ": " + e.what());
  }
}

Lattice lattice_from_json(const json& j) {
  if (j.is_object() && j.contains("gram")) return Lattice(matrix_from_json(j.at("gram")));
  if (j.is_object() && j.contains("name")) return named_lattice(j.at("name").get<std::string>());
  throw InvalidInput("lattice needs \"gram\" or \"name\"");
}

Order order_from_json(const json& j) {
  if (j.is_object() && j.contains("name") && !j.contains("blocks"))
    return curated_order(j.at("name").get<std::string>());
  std::vector<OrderBlock> blocks;
  for (const auto& b : require(j, "blocks")) blocks.push_back(block_from_json(b));
  const std::string name = j.value("name", std::string("custom"));
  Order o(std::move(blocks), name);
  if (j.contains("representation")) o.set_representation(matrices_from_json(j.at("representation")));
  if (j.contains("suborder")) return o.suborder(matrix_from_json(j.at("suborder")), name);
  return o;
}

EndData end_data_from_json(const json& j) {
  EndData data;
  for (const auto& f : require(j, "factors")) {
    IsotypicDatum d;
    d.e = unsigned_from_json(require(f, "e"), "e");
    d.d = unsigned_from_json(require(f, "d"), "d");
    d.g = unsigned_from_json(require(f, "g"), "g");
    d.m = unsigned_from_json(require(f, "m"), "m");
    data.factors.push_back(d);
  }
  if (j.contains("order")) {
    data.order = order_from_json(j.at("order").is_string() ? json{{"name", j.at("order")}} : j.at("order"));
    data.base_discr = reduced_trace_discriminant(*data.order);
  }
  if (j.contains("base_discr")) data.base_discr = int_from_json(j.at("base_discr"));
  else if (!data.order) throw InvalidInput("end data needs \"base_discr\" or \"order\"");
  validate(data);
  return data;
}

ActionData action_from_json(const json& j) {
  ActionData a;
  a.ell = unsigned_from_json(require(j, "ell"), "ell");
  a.precision = static_cast<unsigned>(unsigned_from_json(require(j, "precision"), "precision"));
  a.generators = matrices_from_json(require(j, "generators"));
  a.validate();
  return a;
}

json suite_to_json(const SuiteResult& r) {
  // Long sweeps only list their failures.
  const bool full = r.trials.size() <= kFullTrialListing;
  json trials = json::array();
  for (const auto& t : r.trials) {
    if (!full && t.passed) continue;
    json o{{"index", t.index}, {"passed", t.passed}};
    if (t.vacuous) o["vacuous"] = true;
    if (!t.detail.empty()) o["detail"] = t.detail;
    trials.push_back(std::move(o));
  }
  return json{{"suite", r.name},
              {"statement", r.statement},
              {"seed", r.seed},
              {"count", r.trials.size()},
              {"failures", r.failures()},
              {"vacuous", r.vacuous()},
              {"passed", r.passed()},
              {full ? "trials" : "failed_trials", std::move(trials)}};
}

}  // namespace latkit::io
