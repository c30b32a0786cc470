#ifndef HALFGRIDS_IO_HPP
#define HALFGRIDS_IO_HPP

#include <string>

#include "json.hpp"

#include "halfgrids/geproci.hpp"
#include "halfgrids/halfgrid.hpp"
#include "halfgrids/projgeom.hpp"

namespace halfgrids {

// JSON forms. All rationals are canonical reduced "p" / "p/q" strings, points
// and Pluecker vectors are scaled so the first nonzero coordinate is 1, and
// config members are sorted by label: serialization is bit-exact.

nlohmann::json cyc_to_json(const CycElem &x);
CycElem cyc_from_json(const nlohmann::json &j);

nlohmann::json point_to_json(const ProjPoint &p);
ProjPoint point_from_json(const nlohmann::json &j);

// Lines serialize as canonical Pluecker 6-vectors; input also accepts
// {"points": [coords, coords]} with two spanning points.
nlohmann::json line_to_json(const ProjLine3 &l);
ProjLine3 line_from_json(const nlohmann::json &j);

// Rebuild a line (spanning points and dual planes included) from a Pluecker
// 6-vector (p01, p02, p03, p12, p13, p23).
ProjLine3 line_from_pluecker(const std::array<CycElem, 6> &p);

nlohmann::json config_to_json(const Config &z);
Config config_from_json(const nlohmann::json &j);

nlohmann::json cert_to_json(const GeprociCert &c);
GeprociCert cert_from_json(const nlohmann::json &j);

// File round trips; loaders throw std::invalid_argument on malformed input.
void save_json(const nlohmann::json &j, const std::string &path);
nlohmann::json load_json(const std::string &path);

} // namespace halfgrids

#endif
