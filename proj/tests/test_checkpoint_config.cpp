#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "beqt/checkpoint.hpp"
#include "beqt/config.hpp"
#include "beqt/initial_data.hpp"

using namespace beqt;

namespace {

SimState sample_state() {
  ModelParams p;
  p.a = -0.25;
  p.b = 0.0;
  p.c = 1.5;
  p.xi = 0.4;
  SimState s;
  s.params = p;
  s.t = 0.625;
  s.Q = random_band_qtensor(SpectralGrid::make(32), 19, 6, 1.0);
  s.u = random_band_divfree(s.Q.grid(), 20, 6, 1.0);
  return s;
}

struct TempFile {
  std::string path;
  explicit TempFile(const char* name)
      : path((std::filesystem::temp_directory_path() / name).string()) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("checkpoint round trip is bit exact") {
  const SimState s = sample_state();
  TempFile tmp("beqt_test.ckpt");
  checkpoint_write(s, tmp.path);
  const SimState r = checkpoint_read(tmp.path);
  CHECK(r.t == s.t);
  CHECK(r.params.a == s.params.a);
  CHECK(r.params.xi == s.params.xi);
  CHECK(r.galerkin_n == s.galerkin_n);
  for (std::size_t m = 0; m < s.grid()->size(); ++m) {
    CHECK(r.Q.q11.hat()[m] == s.Q.q11.hat()[m]);
    CHECK(r.Q.q12.hat()[m] == s.Q.q12.hat()[m]);
    CHECK(r.u.x.hat()[m] == s.u.x.hat()[m]);
    CHECK(r.u.y.hat()[m] == s.u.y.hat()[m]);
  }
}

TEST_CASE("checkpoint structured errors") {
  const SimState s = sample_state();
  TempFile tmp("beqt_test2.ckpt");
  checkpoint_write(s, tmp.path);

  SUBCASE("corrupted magic") {
    std::fstream f(tmp.path, std::ios::in | std::ios::out | std::ios::binary);
    f.put('X');
    f.close();
    CHECK_THROWS_AS(checkpoint_read(tmp.path), const CheckpointError&);
  }
  SUBCASE("unsupported version") {
    std::fstream f(tmp.path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(4);
    const std::uint32_t v = 2;
    f.write(reinterpret_cast<const char*>(&v), 4);
    f.close();
    CHECK_THROWS_WITH_AS(checkpoint_read(tmp.path),
                         doctest::Contains("version"), const CheckpointError&);
  }
  SUBCASE("truncated file") {
    const auto sz = std::filesystem::file_size(tmp.path);
    std::filesystem::resize_file(tmp.path, sz / 2);
    CHECK_THROWS_AS(checkpoint_read(tmp.path), const CheckpointError&);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(checkpoint_read("/nonexistent/beqt.ckpt"), const CheckpointError&);
  }
}

TEST_CASE("config parsing") {
  const std::string good =
      "# comment\n"
      "grid.N = 32\n"
      "params.a = -0.2   # inline comment\n"
      "params.xi = 0.5\n"
      "stepper.dt = 0.001\n"
      "stepper.scheme = imex-sbdf2\n"
      "initial.generator = random-band\n"
      "initial.seed = 42\n"
      "run.T = 0.25\n"
      "run.cadence = 5\n";
  const RunConfig cfg = parse_config_text(good);
  CHECK(cfg.N == 32);
  CHECK(cfg.params.a == -0.2);
  CHECK(cfg.params.xi == 0.5);
  CHECK(cfg.stepper.dt == 0.001);
  CHECK(cfg.seed == 42);
  CHECK(cfg.T == 0.25);
  CHECK(cfg.cadence == 5);

  SUBCASE("unknown key is a hard error with line diagnostics") {
    CHECK_THROWS_WITH_AS(parse_config_text(good + "grid.M = 7\n"),
                         doctest::Contains("line 11"), const ConfigError&);
  }
  SUBCASE("missing seed is a hard error") {
    CHECK_THROWS_WITH_AS(parse_config_text("grid.N = 32\n"),
                         doctest::Contains("seed"), const ConfigError&);
  }
  SUBCASE("malformed number") {
    CHECK_THROWS_AS(parse_config_text("params.a = abc\ninitial.seed = 1\n"),
                    const ConfigError&);
  }
  SUBCASE("missing equals") {
    CHECK_THROWS_WITH_AS(parse_config_text("grid.N 32\n"),
                         doctest::Contains("line 1"), const ConfigError&);
  }
}

TEST_CASE("initial state generation is deterministic and grid independent") {
  RunConfig cfg = parse_config_text("initial.seed = 9\nrun.T = 0.1\n");
  cfg.N = 32;
  const SimState a = build_initial_state(cfg);
  const SimState b = build_initial_state(cfg);
  for (std::size_t m = 0; m < a.grid()->size(); ++m)
    CHECK(a.Q.q11.hat()[m] == b.Q.q11.hat()[m]);

  // Same seed on a finer grid holds the same coefficients per mode.
  cfg.N = 64;
  const SimState c = build_initial_state(cfg);
  const auto& g32 = *a.grid();
  const auto& g64 = *c.grid();
  double maxdiff = 0.0;
  for (std::size_t m = 0; m < g32.size(); ++m) {
    const int k1 = g32.k1(m), k2 = g32.k2(m);
    if (k1 == -16 || k2 == -16) continue;
    const std::size_t mf = static_cast<std::size_t>(k1 >= 0 ? k1 : k1 + 64) * 64 +
                           (k2 >= 0 ? k2 : k2 + 64);
    maxdiff = std::max(maxdiff, std::abs(a.Q.q11.hat()[m] - c.Q.q11.hat()[mf]));
    maxdiff = std::max(maxdiff, std::abs(a.u.x.hat()[m] - c.u.x.hat()[mf]));
  }
  CHECK(maxdiff <= 1e-13);
}
