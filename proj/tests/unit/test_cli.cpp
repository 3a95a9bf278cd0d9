#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "latkit/curated_orders.hpp"
#include "latkit/error.hpp"
#include "latkit/named_lattices.hpp"
#include "latkit_io.hpp"

using namespace latkit;
using io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "latkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LATKIT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("json round trips") {
  const IntMatrix m{{1, -2}, {3, 4}};
  CHECK(io::matrix_from_json(io::to_json(m)) == m);
  const Int big("123456789012345678901234567890");
  CHECK(io::to_json(big).is_string());
  CHECK(io::int_from_json(io::to_json(big)) == big);
  CHECK(io::to_json(Int(1) << 53).is_number());
  CHECK(io::to_json(-(Int(1) << 53) - 1).is_string());
  CHECK(io::int_from_json(json(-7)) == -7);
  CHECK(io::int_from_json(json(3.0)) == 3);
  CHECK_THROWS_AS(io::int_from_json(json(2.5)), InvalidInput);
  CHECK_THROWS_AS(io::int_from_json(json("x1")), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_json(json::parse("[[1, 2], [3]]")), InvalidInput);
  CHECK_THROWS_AS(io::read_json_file(data("malformed.json")), InvalidInput);
  CHECK_THROWS_AS(io::read_json_file(data("missing.json")), InvalidInput);
}

TEST_CASE("structured inputs") {
  CHECK(io::lattice_from_json(json{{"name", "U"}}).discriminant() == -1);
  CHECK(io::lattice_from_json(io::read_json_file(data("lattice_u2.json"))).gram() == hyperbolic_plane().gram());
  const Order zi = io::order_from_json(io::read_json_file(data("zi.json")));
  CHECK(reduced_trace_discriminant(zi) == -4);
  CHECK(reduced_trace_discriminant(io::order_from_json(io::read_json_file(data("lipschitz.json")))) == -16);
  const EndData mat2 = io::end_data_from_json(io::read_json_file(data("end_mat2.json")));
  CHECK(mat2.base_discr == -1);
  CHECK(mat2.order.has_value());
  const ActionData a = io::action_from_json(io::read_json_file(data("action_gl2.json")));
  CHECK(a.generators.size() == 2);
  CHECK_THROWS_AS(io::action_from_json(json{{"ell", 4}, {"precision", 2}, {"generators", json::array()}}),
                  InvalidInput);
  CHECK_THROWS_AS(io::end_data_from_json(json{{"factors", json::array()}}), InvalidInput);
}

TEST_CASE("cli examples") {
  const Run sharp = run({"lattice", "discr", "--name", "lambda-sharp"});
  CHECK(sharp.code == cli::kExitOk);
  CHECK(sharp.out.find("discriminant: -1") != std::string::npos);

  const Run lemma = run({"verify", "lemma2.1", "--trials", "200", "--seed", "42"});
  CHECK(lemma.code == cli::kExitOk);
  CHECK(lemma.out.find("200 trials, 0 failures") != std::string::npos);

  const Run b1 = run({"order", "verify-b1", "--input", data("zi.json"), "--lmax", "50"});
  CHECK(b1.code == cli::kExitOk);
  CHECK(b1.out.find("l=2 v=2 semisimple=no") != std::string::npos);
  CHECK(b1.out.find("l=47 v=0 semisimple=yes") != std::string::npos);
}

TEST_CASE("json output echoes the seed and is byte-stable") {
  const std::vector<std::string> args{"verify", "lemma16may", "--trials", "8", "--seed", "7", "--format", "json"};
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const json doc = json::parse(a.out);
  CHECK(doc.at("seed") == 7);
  CHECK(doc.at("count") == 8);
  CHECK(doc.at("verified") == true);
  const json other = json::parse(run({"verify", "lemma16may", "--trials", "8", "--seed", "8", "--format", "json"}).out);
  CHECK(other.at("seed") == 8);
  CHECK(json::parse(run({"avforms", "q", "--g", "2", "--format", "json"}).out).at("seed") == 42);
}

TEST_CASE("every leaf command runs") {
  const std::vector<std::vector<std::string>> ok{
      {"lattice", "disc-group", "--name", "U+<2>"},
      {"lattice", "complement", "--input", data("complement.json")},
      {"lattice", "fixed", "--input", data("fixed_swap.json")},
      {"lattice", "embed-2d", "--d", "13", "--full"},
      {"order", "discr", "--name", "lipschitz"},
      {"order", "mod-l", "--name", "mat2", "--l", "7"},
      {"avforms", "delta", "--end-data", data("end_mat2.json")},
      {"avforms", "delta", "--end-data", data("end_zi.json")},
      {"avforms", "dpg", "--p", "3", "--g", "2"},
      {"clifford", "build", "--lattice", data("lattice_u2.json"), "--check", "index"},
      {"clifford", "trace-check", "--name", "U^2"},
      {"clifford", "symplectic", "--name", "diag(1,1)", "--f1", "1,0", "--f2", "0,1"},
      {"clifford", "index", "--name", "<1>+<2>"},
      {"padic", "verify-16may", "--trials", "5"},
      {"padic", "verify-13aug", "--input", data("action_gl2.json"), "--nmax", "3"},
      {"padic", "centralizer", "--input", data("action_diag.json"), "--n", "2"},
      {"torsion", "decompose", "--g", "1", "--l", "2"},
      {"torsion", "brauer", "--g", "2", "--l", "3", "--gamma", data("gamma_irreducible.json")},
      {"torsion", "ker2", "--g", "1", "--l", "2"},
      {"torsion", "third-summand", "--g", "1", "--l", "3", "--gamma", data("cartan.json")},
      {"verify", "constants"},
      {"verify", "symplectic", "--format", "json"},
  };
  for (const auto& args : ok) {
    const Run r = run(args);
    CAPTURE(args[0] + " " + args[1]);
    CAPTURE(r.err);
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("seed") != std::string::npos);
  }
}

TEST_CASE("specific outputs") {
  CHECK(run({"torsion", "brauer", "--g", "2", "--l", "3", "--gamma", data("gamma_irreducible.json")}).out.find(
            "invariants: [3]") != std::string::npos);
  CHECK(run({"torsion", "third-summand", "--g", "1", "--l", "3", "--gamma", data("cartan.json")})
            .out.find("invariants: [3]") != std::string::npos);
  CHECK(run({"clifford", "index", "--name", "<1>+<2>"}).out.find("invariants: [4,8]") != std::string::npos);
  CHECK(run({"avforms", "q", "--g", "3"}).out.find("Q(3): 54") != std::string::npos);
  const json delta = json::parse(run({"avforms", "delta", "--end-data", data("end_mat2.json"), "--format", "json"}).out);
  CHECK(delta.at("Delta") == -16);
  CHECK(delta.at("Delta_gram") == -16);
  CHECK(delta.at("agrees") == true);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"avforms", "q"}).code == cli::kExitUsage);
  CHECK(run({"avforms", "q", "--g", "1", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run({"lattice", "discr", "--input", data("malformed.json")}).code == cli::kExitUsage);
  CHECK(run({"lattice", "discr", "--input", data("degenerate.json")}).code == cli::kExitUsage);
  CHECK(run({"lattice", "discr"}).code == cli::kExitUsage);
  CHECK(run({"order", "mod-l", "--name", "zi", "--l", "6"}).code == cli::kExitUsage);
  CHECK(run({"avforms", "dpg", "--p", "4", "--g", "1"}).code == cli::kExitUsage);
  CHECK(run({"clifford", "symplectic", "--name", "diag(1,1)", "--f1", "1,1", "--f2", "0,1"}).code ==
        cli::kExitUsage);
  CHECK(run({"clifford", "index", "--name", "diag(1,1,1,1,1)"}).code == cli::kExitUsage);
  CHECK(run({"torsion", "decompose", "--g", "1", "--l", "4"}).code == cli::kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("verify") != std::string::npos);
}
