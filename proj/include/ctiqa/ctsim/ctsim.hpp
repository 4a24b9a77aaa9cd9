// Copyright 2026 The ctiqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ctiqa/common/image.hpp"
#include "ctiqa/dissim/dissim.hpp"

namespace ctiqa::ctsim {

// Lengths in cm, angles in radians. x grows to the right, y grows upwards.
struct Ellipse {
  double center_x = 0.0;
  double center_y = 0.0;
  double semi_a = 1.0;  // along the rotated x axis
  double semi_b = 1.0;
  double rotation = 0.0;
  double delta_hu = 0.0;

  bool contains(double x, double y) const;
};

// Air (-1000 HU) everywhere, plus the sum of ellipse deltas. The first
// ellipse is the water-equivalent body (+1000).
struct Phantom {
  std::vector<Ellipse> ellipses;
  double fov_radius = 20.0;
  std::uint64_t seed = 0;

  double hu_at(double x, double y) const;
};

// Composite HU sampled at pixel centres of an n x n grid spanning the FOV.
std::vector<double> rasterize_hu(const Phantom& phantom, std::int64_t size);

// One body ellipse plus `complexity` non-overlapping interior ellipses with
// deltas in [-150, 250] HU, all strictly inside the body. Deterministic in
// `seed`. Throws InvalidArgument when complexity < 1.
Phantom generate_phantom(std::uint64_t seed, int complexity, double fov_radius = 20.0);

struct Sinogram {
  std::int64_t n_views = 0;
  std::int64_t n_detectors = 0;
  double detector_spacing = 0.0;
  std::vector<double> angles;  // equiangular over [0, pi)
  std::vector<double> values;  // n_views x n_detectors line integrals
  std::string geometry_tag = "parallel";

  double at(std::int64_t view, std::int64_t det) const {
    return values[static_cast<std::size_t>(view * n_detectors + det)];
  }
};

// Exact integral of mu along the ray x cos(theta) + y sin(theta) = s.
double line_integral(const Phantom& phantom, double theta, double s, double mu_water = 0.2);

// Equiangular views over [0, pi).
std::vector<double> view_angles(std::int64_t n_views);

// Exact analytic line integrals of mu = mu_water * (1 + HU / 1000) for rays
// x cos(theta) + y sin(theta) = s at s_k = (k - (n - 1) / 2) * spacing.
// Throws DegenerateGeometry for zero-area ellipses and InvalidArgument for
// n_views < 1 or n_detectors < 2.
Sinogram project(const Phantom& phantom, std::int64_t n_views, std::int64_t n_detectors,
                 double detector_spacing, double mu_water = 0.2);

struct DoseCondition {
  double dose_fraction = 1.0;
  std::int64_t n_views = 180;
  double b0 = 1e5;
  double readout = 10.0;
};

// Photon counts n ~ Poisson(b e^{-l} + r), b = dose_fraction * b0, one per
// ray in sinogram order. Throws NonPositivePhotons.
std::vector<std::int64_t> sample_counts(const Sinogram& sino, const DoseCondition& condition,
                                        std::uint64_t rng_seed);

// Poisson photon counts n ~ Poisson(b e^{-l} + r) with b = dose_fraction * b0,
// returned as post-log l = ln(b / max(n - r, 0.5)). Deterministic in
// `rng_seed`. Throws NonPositivePhotons.
Sinogram insert_noise(const Sinogram& sino, const DoseCondition& condition,
                      std::uint64_t rng_seed);

// Ram-Lak FBP to attenuation (cm^-1) on an out_size grid spanning the FOV.
// Throws InsufficientDetectorCoverage, InvalidArgument (out_size < 16).
std::vector<double> reconstruct_mu(const Sinogram& sino, std::int64_t out_size,
                                   double fov_radius);

// FBP in HU; pixels outside the inscribed circle are -1000.
Image fbp(const Sinogram& sino, std::int64_t out_size, double fov_radius,
          double mu_water = 0.2);

// (clamp(HU, -1000, 350) + 1000) / 1350, elementwise.
Image normalize_hu(const Image& hu);
double normalize_hu(double hu);

struct ProxyCalibration {
  double s0 = 0.30;
  double s1 = 0.98;
};

// 4 * clamp((mean_ssim(image, reference) - s0) / (s1 - s0), 0, 1).
// Throws MissingReference when `reference` is absent, InvalidArgument when
// s0 >= s1.
double assign_proxy_mos(const Image& image, const std::optional<Image>& reference,
                        const ProxyCalibration& calib = {});
double proxy_mos_from_ssim(double mean_ssim, const ProxyCalibration& calib = {});

struct SimConfig {
  std::int64_t n_phantoms = 200;
  int complexity = 6;
  std::int64_t image_size = 64;
  std::int64_t n_detectors = 96;
  double fov_radius = 20.0;
  double mu_water = 0.2;
  std::vector<double> dose_fractions{1.0, 0.5, 0.25, 0.10};
  std::vector<std::int64_t> view_counts{180, 90, 45};
  double b0 = 1e5;
  double readout = 10.0;
  std::uint64_t seed = 2024;
  ProxyCalibration calibration;
};

struct ManifestRow {
  std::string id;
  std::string path;            // relative to the dataset directory
  std::string reference_path;  // relative to the dataset directory
  double dose_fraction = 0.0;
  std::int64_t n_views = 0;
  double proxy_mos = 0.0;
  std::int64_t phantom_index = 0;
};

// The dose x views grid in row-major order (dose outer).
std::vector<DoseCondition> condition_grid(const SimConfig& config);

// Simulates one phantom: returns the normalized noiseless full-view
// reference and the normalized distorted image for every condition.
struct PhantomImages {
  Phantom phantom;
  Image reference;
  std::vector<Image> distorted;
};
PhantomImages simulate_phantom(const SimConfig& config, std::int64_t phantom_index);

// Writes images/, references/ and manifest.csv under `out_dir`. Throws
// ConfigError for invalid configs and IoError on write failures.
std::vector<ManifestRow> build_dataset(const SimConfig& config,
                                       const std::filesystem::path& out_dir);

std::string manifest_csv(const std::vector<ManifestRow>& rows);
std::vector<ManifestRow> read_manifest(const std::filesystem::path& dataset_dir);
void validate(const SimConfig& config);

}  // namespace ctiqa::ctsim
