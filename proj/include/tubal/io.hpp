#pragma once

#include <string>

#include "tubal/tensor3.hpp"

namespace tubal {

// Binary tensor format TNS3, little-endian:
//   magic "TNS3" | u32 version=1 | u32 d1 | u32 d2 | u32 d3 | d1*d2*d3 float64
// Payload is in canonical order (slice-major, column-major slices).
void save_tns3(const Tensor3& a, const std::string& path);
Tensor3 load_tns3(const std::string& path);

// CSV import, long format: one record "j,k,l,value" per line with 1-based
// indices; lines starting with '#' and a "j,k,l,value" header are skipped.
// Every index must be covered exactly once.
Tensor3 load_csv_long(const std::string& path, Dims dims);

// CSV import, one frontal slice per file (rows = d1 lines of d2 values each),
// slice order given by the file list.
Tensor3 load_csv_slices(const std::vector<std::string>& slice_paths);

}  // namespace tubal
