// Copyright 2026 The cwsenum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CWSENUM_CATALOG_H
#define CWSENUM_CATALOG_H

#include <optional>
#include <span>
#include <string_view>

namespace cwsenum {

/// A `.cws` file shipped with the library (compiled in from catalog/).
struct CatalogEntry {
    std::string_view name;
    std::string_view text;
};

std::span<const CatalogEntry> catalog_entries();

/// Looks up by name; a trailing ".cws" and any leading directories are ignored.
std::optional<std::string_view> catalog_text(std::string_view name);

}  // namespace cwsenum

#endif
