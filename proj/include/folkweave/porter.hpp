// Porter suffix stripping for English. Operates on lowercase words; words of
// one or two letters are returned unchanged.
#pragma once

#include <string>
#include <string_view>

namespace folkweave {

std::string porter_stem(std::string_view word);

}  // namespace folkweave
