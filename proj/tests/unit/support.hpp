#pragma once

#include <string_view>
#include <vector>

#include "hessfano/hessfn.hpp"
#include "hessfano/perm.hpp"
#include "hessfano/weightlat.hpp"

inline hessfano::HessFn hf(std::vector<int> values)
{
  return hessfano::HessFn::validate(values);
}

inline hessfano::Perm pm(std::string_view text) { return hessfano::parse_perm(text); }

inline hessfano::ParabolicBlocks blocks(int n, std::vector<hessfano::Block> b)
{
  return hessfano::ParabolicBlocks(n, std::move(b));
}

inline hessfano::Weight wt(std::vector<int> d)
{
  const int n = static_cast<int>(d.size()) + 1;
  return hessfano::Weight(n, std::move(d));
}

inline std::vector<int> full(int n) { return std::vector<int>(static_cast<std::size_t>(n), n); }
