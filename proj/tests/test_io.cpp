#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <locale>
#include <random>
#include <sstream>
#include <string>

#include "logent/io.hpp"

using namespace logent;

TEST(FormatNumber, RoundTripsAtGridPrecision) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int k = 0; k < 10000; ++k) {
    const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    EXPECT_EQ(io::parse_number(io::format_number(v, io::kGridDigits)), v);
  }
  EXPECT_EQ(io::format_number(0.5), "0.5");
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.333333333333333");
}

namespace {
struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};
} // namespace

TEST(FormatNumber, IgnoresStreamAndGlobalLocale) {
  const std::locale comma(std::locale::classic(), new CommaDecimal);
  const std::locale saved = std::locale::global(comma);
  std::ostringstream os;
  os.imbue(comma);
  const auto f = uniform_density(2048, 1234.5, 1.0);
  io::write_density_csv(os, f);
  os << 1.5;
  std::locale::global(saved);
  const std::string text = os.str();
  EXPECT_NE(text.find("\n-617.25,"), std::string::npos);
  EXPECT_NE(text.find("1,5"), std::string::npos); // the stream itself is localized
  std::istringstream in(text.substr(0, text.rfind('\n') + 1));
  auto meta = io::density_metadata(f);
  const auto back = io::read_density(in, meta);
  EXPECT_EQ(back.values(), f.values());
}

TEST(ParseNumber, Errors) {
  EXPECT_THROW(io::parse_number(""), invalid_input);
  EXPECT_THROW(io::parse_number("1.5x"), invalid_input);
  EXPECT_THROW(io::parse_number("1,5"), invalid_input);
  EXPECT_EQ(io::parse_number(" +0.25 \r"), 0.25);
  EXPECT_EQ(io::parse_list("0.5,-1e-3, 2"),
            (std::vector<double>{0.5, -1e-3, 2.0}));
  EXPECT_THROW(io::parse_list("0.5,,1"), invalid_input);
}

TEST(ReadCsv, Errors) {
  std::istringstream empty("");
  EXPECT_THROW(io::read_csv(empty), invalid_input);
  std::istringstream ragged("a,b\n1,2\n3\n");
  EXPECT_THROW(io::read_csv(ragged), invalid_input);
  std::istringstream ok("a,b\r\n1,2\r\n\r\n3,4\r\n");
  const auto t = io::read_csv(ok);
  EXPECT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.column("b"), 1u);
  EXPECT_THROW(t.column("c"), invalid_input);
}

TEST(Json, ProbabilityVector) {
  const SignedProbVector p{2.0 / 3, 2.0 / 3, -1.0 / 3};
  const auto j = io::to_json(p);
  const auto back = io::vector_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.values(), p.values());
  EXPECT_THROW(io::vector_from_json(nlohmann::json::object()), invalid_input);
}

TEST(DensityIo, BitExactRoundTrip) {
  const auto f = gaussian_density(256, 7.3, 0.9, 0.41, 0.17);
  std::stringstream csv;
  io::write_density_csv(csv, f);
  const std::string meta = io::density_metadata(f).dump();
  const auto back = io::read_density(csv, nlohmann::json::parse(meta));
  EXPECT_EQ(back.values(), f.values());
  EXPECT_EQ(back.dz(), f.dz());
  EXPECT_EQ(back.z0(), f.z0());
  EXPECT_EQ(back.h(), f.h());

  std::stringstream again;
  io::write_density_csv(again, back);
  std::stringstream first;
  io::write_density_csv(first, f);
  EXPECT_EQ(again.str(), first.str());

  auto short_meta = nlohmann::json::parse(meta);
  short_meta["N"] = 128;
  std::stringstream csv2;
  io::write_density_csv(csv2, f);
  EXPECT_THROW(io::read_density(csv2, short_meta), invalid_input);
}

TEST(WignerIo, BitExactRoundTrip) {
  const auto g = PhaseSpaceGrid::centered(64, 64, 12.0, 7.0, 1.0, 1.3);
  const auto w = gaussian_pure_wigner(g, {0.5, 0.3, -0.2, 0.1});
  std::stringstream csv;
  io::write_wigner_csv(csv, w);
  const auto meta = nlohmann::json::parse(io::wigner_metadata(w).dump());
  const auto back = io::read_wigner(csv, meta);
  EXPECT_EQ(back.values(), w.values());
  EXPECT_EQ(back.grid().dx, g.dx);
  EXPECT_EQ(back.grid().dp, g.dp);
  EXPECT_EQ(back.grid().mass, g.mass);
  EXPECT_EQ(back.grid().np, g.np);
}

TEST(TrajectoryIo, ReExportIsIdentical) {
  const auto rec =
      trajectory(SignedProbVector{1.0, 0.0, 0.0}, paper_generator3(), 2.0, 0.1);
  std::stringstream first;
  io::write_trajectory_csv(first, rec);
  const std::string text = first.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "t,p_0,p_1,p_2,sum_drift,info_drift");

  std::istringstream in(text);
  const auto table = io::read_csv(in);
  ASSERT_EQ(table.rows.size(), rec.times.size());
  std::ostringstream second;
  second << "t,p_0,p_1,p_2,sum_drift,info_drift\n";
  for (const auto &row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      second << (c ? "," : "") << io::format_number(row[c]);
    second << '\n';
  }
  EXPECT_EQ(second.str(), text);
}

TEST(DiagnosticsIo, Header) {
  const auto g = PhaseSpaceGrid::centered(64, 64, 12.0, 4.0);
  const auto w = gaussian_pure_wigner(g, {0.5});
  std::ostringstream os;
  io::write_diagnostics_csv(os, {io::diagnose(w, 0.0)});
  std::istringstream in(os.str());
  const auto t = io::read_csv(in);
  EXPECT_EQ(t.header, (std::vector<std::string>{"t", "sum", "I", "moment3"}));
  EXPECT_NEAR(t.rows[0][2], w.information(), 1e-14);
}
