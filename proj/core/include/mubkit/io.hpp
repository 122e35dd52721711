/*
   Copyright 2026 The mubkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MUBKIT_IO_HPP
#define MUBKIT_IO_HPP

#include <string>

#include "mubkit/entangle.hpp"
#include "mubkit/geometry.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/state.hpp"

namespace mubkit {

/// Interchange records are JSON with a fixed key order, so identical inputs
/// produce byte-identical output. Schemas are documented in the README.
/// Parsers throw ParseError on malformed input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The "kind" key of a record, e.g. "mub_set" or "bell_family".
std::string record_kind(const std::string& text);

std::string mub_set_to_record(const MubSet& s);
MubSet mub_set_from_record(const std::string& text);

std::string bell_family_to_record(const BellFamily& f);
BellFamily bell_family_from_record(const std::string& text);

std::string plane_to_record(const IncidencePlane& p);
std::string field_table_to_record(const std::vector<RepresentationRow>& rows);
std::string ring_table_to_record(const std::vector<RingRepresentationRow>& rows);

std::string mub_report_to_record(const MubReport& r);
std::string bell_report_to_record(const BellReport& r);

}  // namespace mubkit

#endif
