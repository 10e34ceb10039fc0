#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "kclass/corpus.hpp"
#include "kclass/permutation.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Perm to_oracle(const kclass::Permutation& p) {
  return oracle::Perm(p.images().begin(), p.images().end());
}

inline std::vector<oracle::Perm> to_oracle(const std::vector<kclass::Permutation>& ps) {
  std::vector<oracle::Perm> out;
  for (const auto& p : ps) out.push_back(to_oracle(p));
  return out;
}

inline kclass::Permutation from_images(std::initializer_list<int> images) {
  std::vector<kclass::Point> v;
  for (int x : images) v.push_back(static_cast<kclass::Point>(x));
  return kclass::Permutation(std::move(v));
}

inline std::filesystem::path group_path(const std::string& file) {
  return kclass::default_catalog_dir() / "groups" / file;
}

inline kclass::GroupFile load(const std::string& file) { return kclass::load_group_file(group_path(file)); }

}  // namespace support
