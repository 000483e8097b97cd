#pragma once

// JSON forms of the library's values.
//
//   QPoly        ["1","1"]                 decimal strings, ascending degree
//   Rational     {"num":"1","den":"6"}
//   Perm         [3,1,4,2]                 1-based one-line notation
//   GenSequence  [1,2,1,2]
//   HeckeElt     {"degree":n,"terms":[{"perm":[..],"coeff":[..]}, ...]}  terms sorted by perm

#include <json.hpp>

#include "heckewalk/closedform.hpp"
#include "heckewalk/hecke.hpp"
#include "heckewalk/perm.hpp"
#include "heckewalk/qpoly.hpp"
#include "heckewalk/seq.hpp"
#include "heckewalk/walk.hpp"

namespace heckewalk::json_io {

using nlohmann::json;

json to_json(const QPoly& p);
json to_json(const Rational& x);
json to_json(const Perm& w);
json to_json(const GenSequence& r);
json to_json(const HeckeElt& h);
json to_json(const TightClass& c);
json to_json(const AlphaReport& report);
json to_json(const Distribution& d);

/// Parsers throw std::invalid_argument on schema violations.
QPoly qpoly_from_json(const json& j);
Rational rational_from_json(const json& j);
Perm perm_from_json(const json& j);
GenSequence sequence_from_json(const json& j);
HeckeElt hecke_from_json(const json& j);

}  // namespace heckewalk::json_io
