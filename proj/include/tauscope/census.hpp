#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tauscope/errors.hpp"
#include "tauscope/representation.hpp"

namespace tauscope::census {

using repmod::AlgebraPtr;
using repmod::DimVector;
using repmod::Representation;

struct Item {
  std::size_t id = 0;
  std::string name;
  Representation module;
  DimVector dims;
  bool projective = false;
  bool injective = false;
};

struct Caps {
  std::size_t dimCap = 60;
  std::size_t countCap = 512;
};

// Census ids with multiplicities.
using IdMultiset = std::vector<std::pair<std::size_t, std::size_t>>;

// Indecomposables of a representation-finite algebra, ordered by dimension
// vector and then discovery.  Hom dimensions between items are cached.
class Census {
 public:
  Census(AlgebraPtr a, std::vector<Item> items, Caps caps);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Item>& items() const { return items_; }
  const Item& item(std::size_t id) const { return items_.at(id); }
  std::size_t size() const { return items_.size(); }
  const Caps& caps() const { return caps_; }
  std::optional<std::size_t> findByName(const std::string& name) const;

  // Throws NotInCensus.
  std::size_t identify(const Representation& m) const;
  IdMultiset decomposeIntoIds(const Representation& m) const;

  std::size_t homDimension(std::size_t from, std::size_t to) const;
  const std::vector<repmod::ModuleMap>& homBasis(std::size_t from, std::size_t to) const;
  std::size_t ext1Dimension(std::size_t from, std::size_t to) const;

 private:
  AlgebraPtr algebra_;
  std::vector<Item> items_;
  Caps caps_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::size_t> hom_, ext_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<repmod::ModuleMap>> homBases_;
};

struct ARSequence {
  Representation left;    // tau X
  Representation middle;
  Representation right;   // X
  repmod::ShortExactSequence sequence;
  std::vector<repmod::Summand> middleSummands;
};

// 0 -> tau X -> E -> X -> 0 from a socle element of Ext^1(X, tau X) as a
// right End(X)-module.  Throws IsProjective.
ARSequence almostSplitSequence(const Representation& x);

class RepInfiniteAtCap : public Error {
 public:
  RepInfiniteAtCap(const std::string& cap, std::vector<Item> partial)
      : Error("RepInfiniteAtCap: " + cap), cap_(cap), partial_(std::move(partial)) {}
  const std::string& cap() const { return cap_; }
  const std::vector<Item>& partial() const { return partial_; }

 private:
  std::string cap_;
  std::vector<Item> partial_;
};

// Auslander-Reiten knitting from the projectives and injectives.  Throws
// RepInfiniteAtCap when a module exceeds dimCap or the count exceeds countCap.
Census enumerateIndecomposables(const AlgebraPtr& a, Caps caps = {});

}  // namespace tauscope::census
