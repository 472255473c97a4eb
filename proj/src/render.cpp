#include "harmroot/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>

#include "format.hpp"
#include "parallel.hpp"

namespace harmroot {

namespace {

constexpr double kRootMatchRadius = 1e-6;
constexpr int kRootScanGrid = 40;

int nearest_root(const std::vector<Complex>& roots, Complex z) {
    int best = -1;
    double best_dist = kRootMatchRadius;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double dist = std::abs(z - roots[i]);
        if (dist <= best_dist) {
            best_dist = dist;
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::uint8_t shade_channel(std::uint8_t base, double shade) {
    return static_cast<std::uint8_t>(std::floor(base * shade + 0.5));
}

}  // namespace

BasinImage render_basins(const HarmonicMap& f, StepKind kind, const Window& window,
                         int width, int height, const IterationOptions& opts) {
    if (width < 1 || height < 1) throw Error("render_basins requires width, height >= 1");

    BasinImage image;
    image.width = width;
    image.height = height;
    image.roots = find_zeros(f, kind, window, kRootScanGrid, opts);
    const std::size_t count = static_cast<std::size_t>(width) * height;
    image.pixels.assign(count * 3, 0);
    image.iteration_counts.assign(count, 0);
    image.root_assignment.assign(count, -1);

    // Per-row results are written to disjoint preallocated slots; the extras
    // list is the only shared state.
    std::mutex extras_mutex;
    std::vector<Complex> extras;
    std::vector<int> unconverged_per_row(static_cast<std::size_t>(height), 0);
    std::vector<int> errors_per_row(static_cast<std::size_t>(height), 0);

    detail::parallel_for(height, [&](int row_begin, int row_end) {
        for (int row = row_begin; row < row_end; ++row) {
            for (int col = 0; col < width; ++col) {
                const Complex start(
                    window.x0 + (col + 0.5) * window.width() / width,
                    window.y1 - (row + 0.5) * window.height() / height);
                const std::size_t idx =
                    static_cast<std::size_t>(row) * width + col;

                const IterationTrace trace = iterate(f, kind, start, opts);
                image.iteration_counts[idx] = trace.steps();
                if (trace.status == IterationStatus::StepError) {
                    ++errors_per_row[static_cast<std::size_t>(row)];
                    continue;
                }
                if (trace.status != IterationStatus::Converged) {
                    ++unconverged_per_row[static_cast<std::size_t>(row)];
                    continue;
                }

                const int root = nearest_root(image.roots, *trace.final);
                if (root < 0) {
                    std::lock_guard<std::mutex> lock(extras_mutex);
                    extras.push_back(*trace.final);
                    ++unconverged_per_row[static_cast<std::size_t>(row)];
                    continue;
                }

                image.root_assignment[idx] = root;
                const double shade =
                    0.3 + 0.7 * (1.0 - static_cast<double>(trace.steps()) /
                                           opts.max_iter);
                const auto& base = kBasinPalette[static_cast<std::size_t>(root) % 12];
                image.pixels[idx * 3 + 0] = shade_channel(base[0], shade);
                image.pixels[idx * 3 + 1] = shade_channel(base[1], shade);
                image.pixels[idx * 3 + 2] = shade_channel(base[2], shade);
            }
        }
    });

    for (int row = 0; row < height; ++row) {
        image.unconverged_pixels += unconverged_per_row[static_cast<std::size_t>(row)];
        image.error_pixels += errors_per_row[static_cast<std::size_t>(row)];
    }

    // Deduplicate the informational extras; canonical roots stay untouched.
    const auto re_im_less = [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    std::sort(extras.begin(), extras.end(), re_im_less);
    for (Complex z : extras) {
        if (image.extra_roots.empty() ||
            std::abs(z - image.extra_roots.back()) > 1e-8) {
            image.extra_roots.push_back(z);
        }
    }
    return image;
}

void write_ppm(const BasinImage& image, std::ostream& out) {
    out << "P6\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
}

void write_ppm(const BasinImage& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_ppm(image, out);
}

void write_stats_csv(const BasinImage& image, std::ostream& out) {
    out << "root_index,re,im,pixel_count,mean_iters\n";
    for (std::size_t i = 0; i < image.roots.size(); ++i) {
        long pixel_count = 0;
        long iter_sum = 0;
        for (std::size_t p = 0; p < image.root_assignment.size(); ++p) {
            if (image.root_assignment[p] == static_cast<int>(i)) {
                ++pixel_count;
                iter_sum += image.iteration_counts[p];
            }
        }
        const double mean_iters =
            pixel_count > 0 ? static_cast<double>(iter_sum) / pixel_count : 0.0;
        out << i << "," << detail::format_double(image.roots[i].real()) << ","
            << detail::format_double(image.roots[i].imag()) << "," << pixel_count
            << "," << detail::format_double(mean_iters) << "\n";
    }
}

void write_stats_csv(const BasinImage& image, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_stats_csv(image, out);
}

}  // namespace harmroot
