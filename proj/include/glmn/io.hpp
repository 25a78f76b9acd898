#ifndef GLMN_IO_HPP
#define GLMN_IO_HPP

#include <string>

#include <json.hpp>

#include "glmn/orbit.hpp"
#include "glmn/supermatrix.hpp"

namespace glmn {

/*
 * Matrix documents: {"m": int, "n": int, "entries": [[cell, ...], ...]} with
 * (m+n)^2 cells, row-major. A cell is a JSON integer or a string "p/q" with a
 * nonzero q. On output, entries that fit a 64-bit integer are emitted as JSON
 * numbers and everything else as reduced positive-denominator strings, so no
 * floating point ever appears on the wire.
 */
SuperMatrix matrix_from_json(const nlohmann::json& doc);  // throws ParseError
nlohmann::json matrix_to_json(const SuperMatrix& g);

/*
 * Parameter documents: {"m": int, "n": int, "k": [int, ...],
 * "column_marked": [int, ...], "row_marked": [int, ...], "s": int} with
 * 1-based block positions in the marker lists. Missing lists default to empty
 * and a missing s to 0; validation errors propagate from OrbitParams.
 */
OrbitParams params_from_json(const nlohmann::json& doc);
nlohmann::json params_to_json(const OrbitParams& p);

// Aligned human-readable rendering, one row per line.
std::string matrix_to_text(const SuperMatrix& g);

std::string params_to_text(const OrbitParams& p);

} // namespace glmn

#endif
