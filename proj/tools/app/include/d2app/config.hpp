#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace d2app {

struct Config {
  std::size_t guard = 2000;
  std::vector<int> n_list{1, 2, 4};
  std::vector<int> m_list;  // filled with 2..16
  std::vector<std::size_t> stabilizations{1, 2};
  std::size_t witness_limit = 100;
  int exhaustive_limit = 20;

  Config();
};

/// "1,2,4", "4..12" or a mix such as "1,3..5". Throws d2::ParseError.
std::vector<int> parse_int_list(std::string_view text);

/// Applies key=value lines; '#' starts a comment. Unknown keys are errors.
void apply_config_text(Config& config, std::string_view text);

/// Reads the file named by D2VERIFY_CONFIG, if set.
Config load_config_from_env();

}  // namespace d2app
