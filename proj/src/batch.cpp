#include "amr/batch.hpp"

#include <fnmatch.h>

#include <algorithm>

namespace amr {

namespace fs = std::filesystem;

std::size_t resolve_jobs(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& args) {
  std::vector<fs::path> out;
  for (const std::string& arg : args) {
    const fs::path path(arg);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      for (const auto& entry : fs::directory_iterator(path, ec)) {
        const auto ext = entry.path().extension();
        if (entry.is_regular_file() && (ext == ".json" || ext == ".xml")) out.push_back(entry.path());
      }
      continue;
    }
    const std::string name = path.filename().string();
    if (name.find_first_of("*?[") == std::string::npos) {
      out.push_back(path);
      continue;
    }
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
      if (entry.is_regular_file() && fnmatch(name.c_str(), entry.path().filename().c_str(), 0) == 0) {
        out.push_back(path.has_parent_path() ? entry.path() : entry.path().filename());
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace amr
