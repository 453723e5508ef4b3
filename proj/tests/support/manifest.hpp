#pragma once

// Reader for tests/golden/manifest.txt: lines of `name|exit|arguments`,
// arguments split on spaces with double quotes grouping.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Case {
  std::string name;
  int exit_code = 0;
  std::vector<std::string> args;
};

inline std::vector<std::string> split_args(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool any = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
      any = true;
    } else if (c == ' ' && !quoted) {
      if (any) out.push_back(cur);
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (any) out.push_back(cur);
  return out;
}

inline std::vector<Case> read_manifest(const std::string& dir) {
  std::vector<Case> cases;
  std::ifstream in(dir + "/manifest.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar1 = line.find('|');
    const auto bar2 = line.find('|', bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos) continue;
    cases.push_back(Case{line.substr(0, bar1), std::stoi(line.substr(bar1 + 1, bar2 - bar1 - 1)),
                         split_args(line.substr(bar2 + 1))});
  }
  return cases;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace golden
