#include "cantor4/errors.hpp"
#include "cantor4/report.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace cantor4;

namespace {

RunReport sample() {
  RunReport r;
  r.command = "verify gram";
  r.params = {{"bank", "rho"}, {"rho_re", "0"}};
  r.metrics = {{"max_offdiag", 7.076311083754595e-17}, {"third", 1.0 / 3.0}, {"big", 1e300}};
  r.checks = {{"orthonormal", true}};
  r.tolerances = {{"gram", 1e-8}};
  r.duration_ms = 12;
  r.version = "1.2.3";
  return r;
}

}  // namespace

TEST(RunReport, PassIsConjunction) {
  RunReport r = sample();
  EXPECT_TRUE(r.pass());
  r.checks["other"] = false;
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(RunReport{}.pass());
}

TEST(RunReport, RoundTripIsLossless) {
  const RunReport r = sample();
  EXPECT_EQ(RunReport::from_json(nlohmann::json::parse(r.dump())), r);
  RunReport odd = r;
  odd.metrics["nan"] = std::nan("");
  odd.metrics["inf"] = std::numeric_limits<double>::infinity();
  const RunReport back = RunReport::from_json(nlohmann::json::parse(odd.dump()));
  EXPECT_TRUE(std::isnan(back.metrics.at("nan")));
  EXPECT_EQ(back.metrics.at("inf"), std::numeric_limits<double>::infinity());
}

TEST(RunReport, KeysSortedAndDeterministic) {
  const std::string text = sample().dump();
  EXPECT_EQ(text, sample().dump());
  const auto c = text.find("\"checks\"");
  const auto m = text.find("\"metrics\"");
  const auto v = text.find("\"version\"");
  EXPECT_LT(c, m);
  EXPECT_LT(m, v);
  EXPECT_EQ(text.back(), '\n');
}

TEST(RunReport, RejectsMalformed) {
  EXPECT_THROW(RunReport::from_json(nlohmann::json::object()), DomainError);
  nlohmann::json j = sample().to_json();
  j["pass"] = false;
  EXPECT_THROW(RunReport::from_json(j), DomainError);
}
