/* Copyright 2026 The stashort Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include "doctest.h"
#include "stashort/config.hpp"
#include "stashort/errors.hpp"
#include "test_util.hpp"

using namespace stashort;
using stashort::testing::kPi;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::IoError;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("number expressions") {
  CHECK(parse_number("0.115") == 0.115);
  CHECK(parse_number("pi") == kPi);
  CHECK(parse_number("pi/5") == kPi / 5.0);
  CHECK(parse_number(" 2*pi/5 ") == 2.0 * kPi / 5.0);
  CHECK(parse_number("4.3/171") == 4.3 / 171.0);
  CHECK(parse_number("1e-3") == 1e-3);
  CHECK(parse_number("-pi/4") == -kPi / 4.0);
  CHECK(code_of([] { parse_number("pi/0"); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_number("abc"); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_number(""); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_number("1/"); }) == ErrorCode::ConfigInvalid);
}

TEST_CASE("parsing flat key value text") {
  const RunConfig c = parse_config(
      "# shape\n"
      "tau = 0.1   # inline comment\n"
      "phi = pi/10\n"
      "\n"
      "mode = original\n"
      "noise_channels = amplitude, detuning\n"
      "seed = 18446744073709551615\n"
      "decay_units = omega_max\n");
  CHECK(c.pulse.tau == 0.1);
  CHECK(c.pulse.phi == kPi / 10.0);
  CHECK(c.mode == RunMode::Original);
  CHECK(c.noise.has(NoiseChannel::Amplitude));
  CHECK_FALSE(c.noise.has(NoiseChannel::Angle));
  CHECK(c.noise.master_seed == 18446744073709551615ULL);
  CHECK(c.decay_units == DecayUnits::OmegaMax);
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("invalid input is rejected") {
  CHECK(code_of([] { parse_config("bogus = 1\n"); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_config("tau 0.1\n"); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_config("mode = fast\n"); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_config("steps = 10.5\n"); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_config("noise_shared = maybe\n"); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_config("seed = -3\n"); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_config("tau = 0.5\n").validate(); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_config("gamma1 = -1\n").validate(); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { parse_config("n_runs = 0\n").validate(); }) == ErrorCode::ConfigInvalid);
  CHECK(code_of([] { load_config("/nonexistent/stashort.cfg"); }) == ErrorCode::ConfigMissing);
  try {
    parse_config("tau = 0.1\nwhat = 2\n");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("formatted config round-trips") {
  RunConfig c;
  apply_setting(c, "gamma0", "0.2");
  apply_setting(c, "phi", "pi/7");
  apply_setting(c, "chi", "16");
  apply_setting(c, "noise_shared", "true");
  apply_setting(c, "noise_channels", "angle");
  const std::string text = format_config(c);
  const RunConfig back = parse_config(text);
  CHECK(format_config(back) == text);
  CHECK(back.pulse.phi == c.pulse.phi);
  CHECK(*back.pulse.chi == 16.0);
  CHECK(get_setting(back, "noise_channels") == "angle");
  CHECK(get_setting(back, "T0") == "unset");
  for (const auto& k : config_keys()) CHECK_NOTHROW(get_setting(c, k));
  CHECK_THROWS_AS(get_setting(c, "nope"), Error);
}

TEST_CASE("loading from a file layers over a base") {
  const std::string path = "stashort_test_config.cfg";
  {
    std::ofstream f(path);
    f << "gamma0 = 0.2\n";
  }
  RunConfig base;
  base.steps = 8192;
  const RunConfig c = load_config(path, base);
  CHECK(c.pulse.gamma0 == 0.2);
  CHECK(c.steps == 8192);
  std::remove(path.c_str());
}

}  // TEST_SUITE
