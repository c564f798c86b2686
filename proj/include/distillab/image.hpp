#pragma once

#include <cstdint>
#include <vector>

#include "distillab/core.hpp"

namespace distillab {

// Row-major H x W x C image of doubles. Channel-interleaved.
struct Image {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<double> data;

  Image() = default;
  Image(int w, int h, int c, double fill = 0.0)
      : width(w), height(h), channels(c), data(static_cast<std::size_t>(w) * h * c, fill) {}

  std::size_t size() const { return data.size(); }
  double& at(int x, int y, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  double at(int x, int y, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  bool same_shape(const Image& o) const {
    return width == o.width && height == o.height && channels == o.channels;
  }
  bool all_finite() const;
};

// Binary mask, 0 or 1 per pixel.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> data;

  Mask() = default;
  Mask(int w, int h, uint8_t fill = 0)
      : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t count() const;
};

Image add(const Image& a, const Image& b);
Image sub(const Image& a, const Image& b);
Image scale(const Image& a, double s);
void axpy(Image& acc, double s, const Image& x);  // acc += s * x
double max_abs_diff(const Image& a, const Image& b);

// Mean squared error; optionally restricted to mask==value pixels (all channels).
double mse(const Image& a, const Image& b);
double masked_mse(const Image& a, const Image& b, const Mask& m, uint8_t keep);

// PSNR on [0,1] images; exact matches report the 99 dB sentinel cap.
double psnr_from_mse(double mse_value);

Mask resample_nearest(const Mask& m, int new_w, int new_h);
Image resample_box(const Image& img, int new_w, int new_h);
Image box_blur(const Image& img, int radius, int passes = 3);

}  // namespace distillab
