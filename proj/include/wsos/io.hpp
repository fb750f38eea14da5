#pragma once

/**
 * @file io.hpp
 * @brief File formats: cones, polynomials, certificates, decompositions and
 *        iteration traces.  All numeric payloads are exact "num/den" strings;
 *        no floating point values appear in any file.
 */

#include <string>

#include "wsos/certify.hpp"
#include "wsos/solver.hpp"

namespace wsos {

ConeSpec read_cone_file(const std::string& path);
void write_cone_file(const std::string& path, const ConeSpec& spec);

/// Reads {"coeffs": [...]} and checks the length against the cone dimension.
Vec read_poly_file(const std::string& path, size_t expected_len);
void write_poly_file(const std::string& path, const Vec& coeffs);

Certificate read_certificate_file(const std::string& path);
void write_certificate_file(const std::string& path, const Certificate& cert);

void write_decomposition_file(const std::string& path, const WsosDecomposition& dec,
                              const std::string& digest);
WsosDecomposition read_decomposition_file(const std::string& path);

/// One JSON record per line: {iter, c, delta_c, N, max_bits_x}.
void write_trace_file(const std::string& path, const IterationTrace& trace);

}  // namespace wsos
