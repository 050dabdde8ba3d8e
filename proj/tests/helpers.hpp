#pragma once

#include <string>

#include "ualg/corpus.hpp"
#include "ualg/error.hpp"
#include "ualg/partition.hpp"

namespace testing {

inline ualg::FiniteAlgebra builtin(const std::string& name) {
  auto entry = ualg::find_builtin(name);
  if (!entry) throw ualg::InvalidInput("no builtin named " + name);
  return entry->algebra;
}

inline ualg::Partition blocks(std::size_t n, const std::string& text) {
  return ualg::Partition::parse(n, text);
}

}  // namespace testing
