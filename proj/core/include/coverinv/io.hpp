#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "coverinv/arrangement.hpp"
#include "coverinv/cstar.hpp"
#include "coverinv/fingerprint.hpp"
#include "coverinv/invariants.hpp"
#include "coverinv/space.hpp"

// JSON forms of everything the tool reads or writes. Readers turn malformed
// documents into ParseError; member indices in output are 1-based.

namespace coverinv {

using nlohmann::json;

/// Throws ParseError carrying the path and the parser message.
json read_json_file(const std::string& path);

/// `{"points":[...],"opens":[[...],...]}` or `{"points":[...],"subbasis":[[...],...]}`.
FiniteSpace space_from_json(const json& doc);
json to_json(const FiniteSpace& space);

/// The optional `"cover":[[...],...]` entry of a space document.
std::optional<Cover> cover_from_json(const FiniteSpace& space, const json& doc);
json to_json(const FiniteSpace& space, const Cover& cover);

/// `{"kind":"segment","lo":"0","hi":"1"}`, `{"kind":"line"}`, `{"kind":"circle","circumference":"1"}`.
IntervalDomain domain_from_json(const json& j);
json to_json(const IntervalDomain& d);

/// `{"domain":{...},"members":[{"lo":"0","hi":"1/4","closed_lo":true},...]}`.
IntervalSpec interval_spec_from_json(const json& doc);
json to_json(const IntervalSpec& spec);

/// `{"members":[[{"var":"x","op":"<","c":"8"},...],...]}`.
AxisAlignedSpec axis_spec_from_json(const json& doc);
json to_json(const AxisAlignedSpec& spec);

/// Dispatches on shape: "points" -> finite space, "domain" with "members" ->
/// interval cover, "domain" alone -> interval family, "members" -> plane cover.
Side side_from_json(const json& doc);
json to_json(const Side& side);

json to_json(const HPartition& p);
/// `{"n":k,"edges":[[i,j],...],"labels":[[...],...]}`.
json to_json(const DiGraph& g);
DiGraph digraph_from_json(const json& doc);

json to_json(const BlockDecomposition& b);
json to_json(const KPair& k);
json to_json(const PrimPoset& p);
json to_json(const HereditaryLattice& lattice);
json to_json(const Fingerprint& f);
json to_json(const FingerprintSet& s);

}  // namespace coverinv
