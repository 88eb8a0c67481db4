#pragma once

#include <string>
#include <vector>

namespace brauerkit {

using Label = std::string;
using Word = std::vector<Label>;

}  // namespace brauerkit
