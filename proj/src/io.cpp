#include "tubal/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace tubal {

namespace {

constexpr char kMagic[4] = {'T', 'N', 'S', '3'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw std::runtime_error("tns3: truncated header");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void save_tns3(const Tensor3& a, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("tns3: cannot open for writing: " + path);
    os.write(kMagic, 4);
    write_u32(os, kVersion);
    write_u32(os, static_cast<std::uint32_t>(a.dims().d1));
    write_u32(os, static_cast<std::uint32_t>(a.dims().d2));
    write_u32(os, static_cast<std::uint32_t>(a.dims().d3));
    static_assert(sizeof(double) == 8);
    // Little-endian hosts only; this project does not target big-endian.
    os.write(reinterpret_cast<const char*>(a.data()),
             static_cast<std::streamsize>(a.size() * sizeof(double)));
    if (!os) throw std::runtime_error("tns3: write failed: " + path);
}

Tensor3 load_tns3(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("tns3: cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("tns3: bad magic in " + path);
    const std::uint32_t version = read_u32(is);
    if (version != kVersion) throw std::runtime_error("tns3: unsupported version in " + path);
    Dims dims;
    dims.d1 = static_cast<int>(read_u32(is));
    dims.d2 = static_cast<int>(read_u32(is));
    dims.d3 = static_cast<int>(read_u32(is));
    Tensor3 a(dims);
    is.read(reinterpret_cast<char*>(a.data()),
            static_cast<std::streamsize>(a.size() * sizeof(double)));
    if (!is) throw std::runtime_error("tns3: truncated payload in " + path);
    return a;
}

Tensor3 load_csv_long(const std::string& path, Dims dims) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("csv: cannot open: " + path);
    Tensor3 a(dims);
    std::vector<char> seen(static_cast<std::size_t>(dims.count()), 0);
    std::string line;
    std::int64_t filled = 0;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("j,", 0) == 0) continue;  // header
        std::istringstream ls(line);
        int j, k, l;
        double v;
        char c1, c2, c3;
        if (!(ls >> j >> c1 >> k >> c2 >> l >> c3 >> v) || c1 != ',' || c2 != ',' || c3 != ',')
            throw std::runtime_error("csv: malformed line: " + line);
        a.at(j - 1, k - 1, l - 1) = v;
        auto& flag =
            seen[static_cast<std::size_t>(((static_cast<std::int64_t>(l - 1) * dims.d2 + (k - 1)) *
                                           dims.d1) + (j - 1))];
        if (!flag) {
            flag = 1;
            ++filled;
        }
    }
    if (filled != dims.count())
        throw std::runtime_error("csv: file does not cover every entry exactly once");
    return a;
}

Tensor3 load_csv_slices(const std::vector<std::string>& slice_paths) {
    if (slice_paths.empty()) throw std::invalid_argument("csv: no slice files");
    std::vector<std::vector<double>> rows;
    int d1 = -1, d2 = -1;
    const int d3 = static_cast<int>(slice_paths.size());
    Tensor3 out;
    for (int l = 0; l < d3; ++l) {
        std::ifstream is(slice_paths[static_cast<std::size_t>(l)]);
        if (!is) throw std::runtime_error("csv: cannot open: " + slice_paths[l]);
        rows.clear();
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty() || line[0] == '#') continue;
            rows.emplace_back();
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) rows.back().push_back(std::stod(cell));
        }
        if (rows.empty()) throw std::runtime_error("csv: empty slice file: " + slice_paths[l]);
        if (d1 < 0) {
            d1 = static_cast<int>(rows.size());
            d2 = static_cast<int>(rows[0].size());
            out = Tensor3(d1, d2, d3);
        }
        if (static_cast<int>(rows.size()) != d1)
            throw std::runtime_error("csv: inconsistent row count in " + slice_paths[l]);
        for (int j = 0; j < d1; ++j) {
            if (static_cast<int>(rows[j].size()) != d2)
                throw std::runtime_error("csv: ragged row in " + slice_paths[l]);
            for (int k = 0; k < d2; ++k) out(j, k, l) = rows[j][k];
        }
    }
    return out;
}

}  // namespace tubal
