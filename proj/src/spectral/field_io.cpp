#include "hwcm/spectral/field_io.hpp"

#include "hwcm/errors.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace hwcm {

static_assert(std::endian::native == std::endian::little,
              "field dumps are written in host order, which must be little-endian");

namespace {

constexpr std::array<char, 4> kMagic{'H', 'W', 'S', 'F'};

void put_u32(std::ostream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}

} // namespace

void write_field_binary(std::ostream& os, const SpectralField& f) {
    os.write(kMagic.data(), 4);
    put_u32(os, kFieldFormatVersion);
    put_u32(os, static_cast<std::uint32_t>(f.n()));
    put_u32(os, 0);
    for (const auto& v : f.data()) {
        const double parts[2] = {v.real(), v.imag()};
        os.write(reinterpret_cast<const char*>(parts), sizeof parts);
    }
    if (!os) throw std::runtime_error("failed writing spectral field");
}

SpectralField read_field_binary(std::istream& is) {
    std::array<char, 4> magic{};
    is.read(magic.data(), 4);
    if (!is || magic != kMagic) throw std::runtime_error("not a spectral field dump (bad magic)");
    const auto version = get_u32(is);
    if (version != kFieldFormatVersion) {
        throw std::runtime_error("unsupported field dump version " + std::to_string(version));
    }
    const auto n = get_u32(is);
    (void)get_u32(is);
    if (!is || n == 0 || n > (1u << 15)) throw std::runtime_error("corrupt field dump header");
    SpectralField f(static_cast<int>(n));
    for (auto& v : f.data()) {
        double parts[2];
        is.read(reinterpret_cast<char*>(parts), sizeof parts);
        v = {parts[0], parts[1]};
    }
    if (!is) throw std::runtime_error("truncated field dump");
    return f;
}

void save_field_binary(const std::string& path, const SpectralField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_field_binary(os, f);
}

SpectralField load_field_binary(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_field_binary(is);
}

void write_field_csv(std::ostream& os, const SpectralField& f) {
    const int n = f.n();
    os << "kx,ky,re,im\n";
    os.precision(17);
    for (int kx = -n; kx < n; ++kx) {
        for (int ky = -n; ky < n; ++ky) {
            const cplx v = f[{kx, ky}];
            os << kx << ',' << ky << ',' << v.real() << ',' << v.imag() << '\n';
        }
    }
}

} // namespace hwcm
