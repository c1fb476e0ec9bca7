#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "islrec/classifier.hpp"

namespace islrec {

// SIGNDB v1, a line-oriented text format:
//
//   SIGNDB 1 <templateCount>
//   T <label> <sourceId>           (sourceId runs to end of line)
//   L <5 eigenvalues>
//   V 1 <components> ... V 5 <components>
//
// Reals use the shortest decimal form that round-trips, so
// load(save(db)) == db bit for bit.
inline constexpr int kSignDbVersion = 1;

std::string serialize_db(const TemplateDb& db);
TemplateDb parse_db(std::string_view text);

void save_db(const TemplateDb& db, const std::filesystem::path& path);
TemplateDb load_db(const std::filesystem::path& path);

}  // namespace islrec
