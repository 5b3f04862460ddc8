#pragma once

#include "hwcm/spectral/field.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hwcm {

/// Binary dump: 16-byte little-endian header ("HWSF", version u32, n u32,
/// reserved u32) followed by m*m (re, im) float64 pairs in storage order.
inline constexpr std::uint32_t kFieldFormatVersion = 1;

void write_field_binary(std::ostream& os, const SpectralField& f);
SpectralField read_field_binary(std::istream& is);
void save_field_binary(const std::string& path, const SpectralField& f);
SpectralField load_field_binary(const std::string& path);

/// Debug CSV: header "kx,ky,re,im" then one line per mode, kx then ky ascending from -n.
void write_field_csv(std::ostream& os, const SpectralField& f);

} // namespace hwcm
