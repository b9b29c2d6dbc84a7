#include <string>

#include "doctest.h"
#include "mwb/descriptor.hpp"
#include "mwb/errors.hpp"

using namespace mwb;

TEST_CASE("exact eigenvalue grammar round-trips") {
  const char* texts[] = {"1", "zeta(1/3)", "q^(-2/3)", "zeta(5/6)*q^(7/2)",
                         "zeta(2/3)*q^(-1)"};
  for (const char* t : texts) CHECK(exact_eig_str(parse_exact_eig(t)) == t);
  const ExactEig e = parse_exact_eig("zeta(5/6)*q^(7/2)");
  CHECK(e.phase == Rat(5, 6));
  CHECK(e.qexp == Rat(7, 2));
  CHECK(exact_eig_str(ExactEig{Rat(0), Rat(0)}) == "1");
  CHECK(exact_eig_str(ExactEig{Rat(7, 6), Rat(0)}) == "zeta(1/6)");
  CHECK_THROWS_AS(parse_exact_eig(""), input_error);
  CHECK_THROWS_AS(parse_exact_eig("2"), input_error);
  CHECK_THROWS_AS(parse_exact_eig("1junk"), input_error);
  CHECK_THROWS_AS(parse_exact_eig("zeta(1/3)*"), input_error);
  CHECK_THROWS_AS(parse_exact_eig("q^(1/3)*zeta(1/3)"), input_error);
  CHECK_THROWS_AS(parse_exact_eig("zeta(1/3"), input_error);
}

TEST_CASE("canonical dump is a byte-exact fixed point") {
  const std::string padic =
      "{\"eigenvalues\":[\"zeta(1/3)*q^(1/2)\",\"q^(-1)\"],"
      "\"field\":\"padic\",\"kind\":\"sp\",\"m\":3,\"q\":7}";
  CHECK(dump_descriptor(parse_descriptor(padic)) == padic);
  const std::string cxd =
      "{\"characters\":[[2,0.3,0.1],[-1,-0.2,0.4]],"
      "\"field\":\"complex\",\"kind\":\"gl\",\"m\":2}";
  CHECK(dump_descriptor(parse_descriptor(cxd)) == cxd);
  // non-canonical spelling normalizes, then stays fixed
  const std::string messy =
      "{ \"kind\": \"sp\", \"q\": 7, \"m\": 3,\n"
      "  \"field\": \"padic\", \"eigenvalues\": [\"zeta(4/3)*q^(1/2)\", "
      "\"q^(-1)\"] }";
  const std::string canon = dump_descriptor(parse_descriptor(messy));
  CHECK(canon == padic);
  CHECK(dump_descriptor(parse_descriptor(canon)) == canon);
  // numeric eigenvalues keep their [re, im] shape
  const std::string num =
      "{\"eigenvalues\":[[0.5,0.25],[-1.0,0.0]],"
      "\"field\":\"padic\",\"kind\":\"gl\",\"m\":2,\"q\":13}";
  const std::string num_canon = dump_descriptor(parse_descriptor(num));
  CHECK(dump_descriptor(parse_descriptor(num_canon)) == num_canon);
  CHECK_FALSE(parse_descriptor(num).exact);
}

TEST_CASE("schema violations are rejected with the offending key") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(parse_descriptor(text), input_error);
  };
  bad("not json at all");
  bad("[1,2,3]");
  bad("{\"field\":\"padic\",\"m\":3,\"q\":7,\"eigenvalues\":[\"1\"]}");
  bad("{\"kind\":\"so\",\"field\":\"padic\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[\"1\"]}");
  bad("{\"kind\":\"gl\",\"field\":\"real\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[\"1\"]}");
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"q\":7,\"eigenvalues\":[\"1\"]}");
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"m\":0,\"q\":7,"
      "\"eigenvalues\":[\"1\"]}");
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"m\":1.5,\"q\":7,"
      "\"eigenvalues\":[\"1\"]}");
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"m\":3,\"eigenvalues\":[\"1\"]}");
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"m\":3,\"q\":8,"
      "\"eigenvalues\":[\"1\"]}");  // 2m must divide q-1
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[]}");
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[\"1\",[0.5,0.5]]}");  // mixed representations
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[[0.0,0.0]]}");  // zero eigenvalue
  bad("{\"kind\":\"gl\",\"field\":\"padic\",\"m\":3,\"q\":7,"
      "\"eigenvalues\":[\"1\"],\"characters\":[[0,0,0]]}");
  bad("{\"kind\":\"gl\",\"field\":\"complex\",\"m\":1,"
      "\"characters\":[[0,0,0]],\"q\":7}");
  bad("{\"kind\":\"gl\",\"field\":\"complex\",\"m\":1,"
      "\"characters\":[[0,0]]}");
  bad("{\"kind\":\"gl\",\"field\":\"complex\",\"m\":1,"
      "\"characters\":[]}");
  bad("{\"kind\":\"gl\",\"field\":\"complex\",\"m\":1,"
      "\"characters\":[[0,0,0]],\"extra\":1}");  // unknown key
  CHECK_THROWS_AS(load_descriptor_file("/nonexistent/path.json"), input_error);
}

TEST_CASE("descriptor conversion picks the matching representation") {
  const std::string padic =
      "{\"eigenvalues\":[\"zeta(1/3)*q^(1/2)\",\"q^(-1)\"],"
      "\"field\":\"padic\",\"kind\":\"sp\",\"m\":3,\"q\":7}";
  const RepDescriptor d = parse_descriptor(padic);
  const auto rep = descriptor_to_exact(d);
  CHECK(rep.kind == RepKind::Sp);
  CHECK(rep.m == 3);
  CHECK(rep.rank() == 2);
  CHECK_THROWS_AS(descriptor_to_numeric(d), input_error);
  CHECK_THROWS_AS(descriptor_to_complex(d), input_error);
  const std::string cxd =
      "{\"characters\":[[2,0.3,0.1]],\"field\":\"complex\",\"kind\":\"sp\","
      "\"m\":3}";
  const auto crep = descriptor_to_complex(parse_descriptor(cxd));
  CHECK(crep.kind == ArchKind::SpLike);
  CHECK(crep.r == 3);  // odd cover degree keeps r = m
  CHECK(crep.chars.size() == 1);
  CHECK_THROWS_AS(descriptor_to_exact(parse_descriptor(cxd)), input_error);
  const std::string num =
      "{\"eigenvalues\":[[0.5,0.25]],\"field\":\"padic\",\"kind\":\"gl\","
      "\"m\":2,\"q\":13}";
  const auto nrep = descriptor_to_numeric(parse_descriptor(num));
  CHECK(nrep.kind == RepKind::GL);
  CHECK(nrep.rank() == 1);
  CHECK_THROWS_AS(descriptor_to_exact(parse_descriptor(num)), input_error);
}
