#pragma once

// Built-in fixtures and a generator of random finite categories.

#include <random>
#include <string>
#include <vector>

#include "sdcat/complex.hpp"
#include "sdcat/fincat.hpp"

namespace sdcat {

struct NamedCategory {
  std::string name;
  CategoryPtr category;
};

struct NamedPoset {
  std::string name;
  Poset poset;
};

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

struct NamedFunctor {
  std::string name;
  std::string source;  // corpus category names
  std::string target;
  FunctorData functor;
};

/// parallel_pair, groupoid, z2, idempotent, chain2, chain3, span,
/// commutative_square, terminal, discrete2, empty.
const std::vector<NamedCategory>& corpus_categories();
/// UnknownObject for a name not in the corpus.
CategoryPtr corpus_category(const std::string& name);

const std::vector<NamedPoset>& corpus_posets();
const std::vector<NamedComplex>& corpus_complexes();
const std::vector<NamedFunctor>& corpus_functors();

/// Concrete category of maps between finite sets of size 1..3: up to
/// `max_objects` sets, a few random generating maps, closed under
/// composition. Draws again until at most `max_arrows` non-identity arrows.
FinCategory random_category(std::mt19937& rng, int max_objects = 4, int max_arrows = 8);

}  // namespace sdcat
