#pragma once

#include <string>

#include "distillab/field.hpp"
#include "distillab/image.hpp"

namespace distillab::io {

// PFM: 32-bit float, little-endian (negative scale), rows bottom-to-top.
// 1-channel ("Pf") or 3-channel ("PF").
void write_pfm(const std::string& path, const Image& img);
Image read_pfm(const std::string& path);

// 8-bit PNG, grayscale or RGB. Values clamped to [0,1] on write.
void write_png(const std::string& path, const Image& img);
Image read_png(const std::string& path);  // returns values in [0,1]

// Masks are strict 0/255 grayscale PNGs; anything else is rejected.
void write_mask_png(const std::string& path, const Mask& mask);
Mask read_mask_png(const std::string& path);

// "VXG1" voxel grid container: magic, little-endian u32 dims, bbox as
// 6 x f64, then raw_density and raw_color as f64 arrays in x-fastest order.
void write_vxg(const std::string& path, const field::VoxelGrid& grid);
field::VoxelGrid read_vxg(const std::string& path);

bool file_exists(const std::string& path);
void make_dirs(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace distillab::io
