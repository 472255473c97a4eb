#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "harmroot/iteration.hpp"

namespace harmroot {

/// Fixed 12-entry basin palette, cycled by canonical root index.
inline constexpr std::array<std::array<std::uint8_t, 3>, 12> kBasinPalette = {{
    {230, 25, 75},    // red
    {60, 180, 75},    // green
    {255, 225, 25},   // yellow
    {0, 130, 200},    // blue
    {245, 130, 48},   // orange
    {145, 30, 180},   // purple
    {70, 240, 240},   // cyan
    {240, 50, 230},   // magenta
    {210, 245, 60},   // lime
    {250, 190, 212},  // pink
    {0, 128, 128},    // teal
    {220, 190, 255},  // lavender
}};

/// Rendered basin-of-attraction image. Pixels are row-major RGB triples,
/// top row first. Per-pixel assignment is the canonical root index or -1
/// when the pixel did not converge to a listed root.
struct BasinImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
    std::vector<Complex> roots;
    std::vector<int> iteration_counts;
    std::vector<int> root_assignment;

    /// Converged finals farther than 1e-6 from every canonical root; colored
    /// as unconverged, reported for diagnostics only.
    std::vector<Complex> extra_roots;
    int unconverged_pixels = 0;
    int error_pixels = 0;
};

/// Renders basins over the window: establishes the canonical root list with
/// find_zeros (grid 40), then iterates from every pixel center. Converged
/// pixels take palette[root_index % 12] scaled by
/// shade = 0.3 + 0.7*(1 - iters/max_iter), rounded half-up; unconverged and
/// erroring pixels are black. Row-parallel; output is byte-identical for any
/// HARMROOT_THREADS value.
BasinImage render_basins(const HarmonicMap& f, StepKind kind, const Window& window,
                         int width, int height, const IterationOptions& opts = {});

/// Binary PPM: "P6\n{W} {H}\n255\n" followed by the RGB payload.
void write_ppm(const BasinImage& image, std::ostream& out);
void write_ppm(const BasinImage& image, const std::string& path);

/// Per-root statistics with header root_index,re,im,pixel_count,mean_iters.
void write_stats_csv(const BasinImage& image, std::ostream& out);
void write_stats_csv(const BasinImage& image, const std::string& path);

}  // namespace harmroot
