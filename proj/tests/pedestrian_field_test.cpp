#include "riskfield/pedestrian_field.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

namespace riskfield {
namespace {

TEST_CASE("pearson parameter array order round-trips") {
  const PearsonParams p{3.8301, 0.0090, 25.7824, 0.0105, 18.3901, 0.7999, 5.7181,
                        617.3393};
  const std::array<double, 8> a = to_array(p);
  CHECK(a[0] == 3.8301);   // mu_v
  CHECK(a[4] == 18.3901);  // rho
  CHECK(a[7] == 617.3393); // b
  const PearsonParams back = pearson_from_array(a);
  CHECK(to_array(back) == a);
}

TEST_CASE("intensity at the distribution mean is gamma * beta^-b") {
  PearsonParams p;
  p.gamma = 3.7;
  p.beta = 2.5;
  p.b = 1.5;
  CHECK(pearson_intensity(p.mu_v, p.mu_s, p) ==
        doctest::Approx(3.7 * std::pow(2.5, -1.5)).epsilon(1e-14));
  // With b = 2 the identity is gamma / beta^2 exactly.
  p.b = 2.0;
  CHECK(pearson_intensity(p.mu_v, p.mu_s, p) ==
        doctest::Approx(3.7 / (2.5 * 2.5)).epsilon(1e-14));
}

TEST_CASE("the published fitted vector underflows to zero at its own mean") {
  // 0.7999 * 5.7181^-617.3393 is ~1e-467, far below the double minimum;
  // the literal evaluation is exactly 0.
  const PearsonParams p = pearson_from_array(
      {3.8301, 0.0090, 25.7824, 0.0105, 18.3901, 0.7999, 5.7181, 617.3393});
  CHECK(pearson_intensity(p.mu_v, p.mu_s, p) == 0.0);
}

TEST_CASE("unit deviations with rho 0, beta 1, b 1, gamma 1 give 1/3") {
  PearsonParams p;
  p.mu_v = 4.0;
  p.mu_s = 10.0;
  p.delta_v = 2.0;
  p.delta_s = 5.0;
  p.rho = 0.0;
  p.gamma = 1.0;
  p.beta = 1.0;
  p.b = 1.0;
  CHECK(pearson_intensity(p.mu_v + p.delta_v, p.mu_s + p.delta_s, p) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("a non-positive quadratic-form base raises a domain error naming v and s") {
  PearsonParams p;
  p.rho = 2.0;  // pushes the form negative at equal unit deviations
  const double v = p.mu_v + p.delta_v;
  const double s = p.mu_s + p.delta_s;
  CHECK_THROWS_WITH_AS(pearson_intensity(v, s, p),
                       doctest::Contains("v=6"), std::domain_error);
  try {
    pearson_intensity(v, s, p);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("s=15") != std::string::npos);
  }
}

TEST_CASE("ttc divides distance by speed") {
  CHECK(ttc(10.0, 5.0) == doctest::Approx(2.0));
  CHECK(ttc(0.0, 5.0) == 0.0);
}

TEST_CASE("ttc caps at 100 s for a near-stationary ego") {
  CHECK(ttc(10.0, 0.0) == 100.0);
  CHECK(ttc(10.0, 0.1) == 100.0);   // the floor is inclusive
  CHECK(ttc(10.0, 0.11) < 100.0);
}

TEST_CASE("ttc rejects negative distance") {
  CHECK_THROWS_AS(ttc(-0.5, 5.0), std::invalid_argument);
}

TEST_CASE("pedestrian risk with vanishing intensity and zero distance is 1") {
  PedestrianRiskParams params;
  params.eta1 = 0.5;
  params.eta2 = 0.5;
  params.pearson.gamma = 1e-300;  // lambda ~ 0 to double precision
  // s = 0 makes the TTC term e^0; ego speed above the cap floor.
  CHECK(pedestrian_risk(4.0, 0.0, params) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("a far pedestrian leaves only the intensity term") {
  PedestrianRiskParams params;
  params.eta1 = 0.4;
  params.eta2 = 0.6;
  params.pearson.gamma = 1e-300;
  // TTC = 1000/5 = 200 -> e^-200 ~ 1e-87, negligible against 0.4.
  CHECK(pedestrian_risk(5.0, 1000.0, params) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("risk pins the worked example 0.3e^0.2 + 0.7e^-2") {
  PedestrianRiskParams params;
  params.eta1 = 0.3;
  params.eta2 = 0.7;
  // Center the intensity at (v, s) = (5, 10) so lambda = gamma = 0.2 there,
  // and TTC = 10/5 = 2.
  params.pearson = {5.0, 10.0, 1.0, 1.0, 0.0, 0.2, 1.0, 2.0};
  const double risk = pedestrian_risk(5.0, 10.0, params);
  CHECK(risk == doctest::Approx(0.46113).epsilon(5e-5));  // published rounding
  CHECK(risk == doctest::Approx(0.3 * std::exp(0.2) + 0.7 * std::exp(-2.0))
                    .epsilon(1e-14));
}

TEST_CASE("intensity is clamped at 10 before exponentiation") {
  PedestrianRiskParams params;
  params.pearson.gamma = 1e6;  // lambda far beyond the clamp at the mean
  const double v = params.pearson.mu_v;
  const double s = params.pearson.mu_s;
  const double expected = 0.5 * std::exp(10.0) + 0.5 * std::exp(-ttc(s, v));
  CHECK(pedestrian_risk(v, s, params) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("strict positivity: risk never drops below eta2 * e^-ttc_cap") {
  PedestrianRiskParams params;
  for (double v : {0.0, 1.0, 5.0, 20.0}) {
    for (double s : {0.0, 2.0, 15.0, 80.0}) {
      CHECK(pedestrian_risk(v, s, params) > params.eta2 * std::exp(-kTtcCap));
    }
  }
}

TEST_CASE("with eta1 = 0 the surface decreases strictly in distance") {
  PedestrianRiskParams params;
  params.eta1 = 0.0;
  params.eta2 = 1.0;
  const AxisRange v_range{2.0, 2.0, 2};
  const AxisRange s_range{1.0, 30.0, 24};
  const PedestrianSurface surface = pedestrian_surface(v_range, s_range, params);
  for (int iv = 0; iv < v_range.n; ++iv) {
    for (int is = 1; is < s_range.n; ++is) {
      CHECK(surface.at(iv, is) < surface.at(iv, is - 1));
    }
  }
}

TEST_CASE("with eta2 = 0 the surface is eta1 * e^lambda") {
  PedestrianRiskParams params;
  params.eta1 = 0.8;
  params.eta2 = 0.0;
  const AxisRange v_range{1.0, 7.0, 7};
  const AxisRange s_range{2.0, 28.0, 14};
  const PedestrianSurface surface = pedestrian_surface(v_range, s_range, params);
  for (int iv = 0; iv < v_range.n; ++iv) {
    for (int is = 0; is < s_range.n; ++is) {
      const double lambda = std::min(
          pearson_intensity(v_range.value(iv), s_range.value(is), params.pearson),
          kLambdaCap);
      CHECK(surface.at(iv, is) == doctest::Approx(0.8 * std::exp(lambda)).epsilon(1e-14));
    }
  }
}

TEST_CASE("surface blow-up points take the clamped maximum intensity") {
  PedestrianRiskParams params;
  params.pearson.rho = 2.0;  // base goes non-positive near equal deviations
  const double v = params.pearson.mu_v + params.pearson.delta_v;
  const double s = params.pearson.mu_s + params.pearson.delta_s;
  const PedestrianSurface surface =
      pedestrian_surface({v, v, 2}, {s, s, 2}, params);
  const double expected = 0.5 * std::exp(kLambdaCap) + 0.5 * std::exp(-ttc(s, v));
  CHECK(surface.at(0, 0) == doctest::Approx(expected).epsilon(1e-14));
}

GridSpec small_grid() {
  return {{-5.0, -5.0}, 0.5, 40, 40};  // 20 m x 20 m from (-5,-5)
}

TEST_CASE("no pedestrians produce a zero field") {
  VehicleState ego{"ego", 0.0, 0.0, 5.0, 0.0, 0.0, 4.5, 1.8, 1};
  const GridField field = pedestrian_grid_field(ego, {}, small_grid(), {});
  CHECK(field.max_value() == 0.0);
}

TEST_CASE("one pedestrian peaks at its own cell") {
  VehicleState ego{"ego", 0.0, 0.0, 5.0, 0.0, 0.0, 4.5, 1.8, 1};
  const GridSpec grid = small_grid();
  const PedestrianState ped{"p1", 2.25, 7.25};  // a cell center
  const GridField field = pedestrian_grid_field(ego, {ped}, grid, {});
  const auto cell = world_to_cell(ped.position(), grid);
  REQUIRE(cell.has_value());
  CHECK(field.at(cell->row, cell->col) == field.max_value());
  CHECK(field.max_value() > 0.0);
}

TEST_CASE("mirrored pedestrians form equal-height peaks") {
  VehicleState ego{"ego", 0.0, 0.0, 5.0, 0.0, 0.0, 4.5, 1.8, 1};
  const GridSpec grid = small_grid();
  const PedestrianState left{"pl", -4.25, 6.25};
  const PedestrianState right{"pr", 4.25, 6.25};
  const GridField field = pedestrian_grid_field(ego, {left, right}, grid, {});
  const auto lc = world_to_cell(left.position(), grid);
  const auto rc = world_to_cell(right.position(), grid);
  REQUIRE(lc.has_value());
  REQUIRE(rc.has_value());
  CHECK(field.at(lc->row, lc->col) ==
        doctest::Approx(field.at(rc->row, rc->col)).epsilon(1e-12));
}

TEST_CASE("a pedestrian outside the grid contributes nothing") {
  VehicleState ego{"ego", 0.0, 0.0, 5.0, 0.0, 0.0, 4.5, 1.8, 1};
  const PedestrianState far{"pf", 100.0, 100.0};
  const GridField field = pedestrian_grid_field(ego, {far}, small_grid(), {});
  CHECK(field.max_value() == 0.0);
}

TEST_CASE("the deposit is translation equivariant") {
  VehicleState ego{"ego", 0.0, 0.0, 5.0, 0.0, 0.0, 4.5, 1.8, 1};
  const PedestrianState ped{"p1", 1.25, 3.75};
  const GridField base = pedestrian_grid_field(ego, {ped}, small_grid(), {});

  const Vec2 shift{10.0, 7.0};
  VehicleState moved_ego = ego;
  moved_ego.x += shift.x;
  moved_ego.y += shift.y;
  PedestrianState moved_ped = ped;
  moved_ped.x += shift.x;
  moved_ped.y += shift.y;
  GridSpec moved_grid = small_grid();
  moved_grid.origin = moved_grid.origin + shift;
  const GridField moved =
      pedestrian_grid_field(moved_ego, {moved_ped}, moved_grid, {});
  for (size_t i = 0; i < base.values.size(); ++i) {
    CHECK(moved.values[i] == doctest::Approx(base.values[i]).epsilon(1e-12));
  }
}

}  // namespace
}  // namespace riskfield
