#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stringcone/errors.hpp"

namespace stringcone {

enum class Family { A, D, E };

using IntMatrix = std::vector<std::vector<int>>;
using IntVector = std::vector<int>;

// Simply-laced Cartan matrix with its positive root system.
//
// Node labels are 1..n.  Type A is the path 1-2-...-n.  Type D forks at
// node n-2 (so D4 has node 2 adjacent to 1, 3 and 4).  Type E attaches
// node 2 to node 4 of the path 1-3-4-5-...-n.
struct CartanDatum {
  Family family;
  int rank;
  IntMatrix cartan;  // (i,j) 0-based storage of c_{i+1,j+1}

  // Positive roots in simple-root coordinates, sorted by (height, lex).
  std::vector<IntVector> positive_roots;

  int n() const { return rank; }
  int N() const { return static_cast<int>(positive_roots.size()); }
  int c(int i, int j) const { return cartan[i - 1][j - 1]; }  // 1-based
};

CartanDatum cartan_matrix(Family family, int rank);
CartanDatum cartan_matrix(const std::string& type);  // "A2", "D4", "E6", ...
std::string type_string(const CartanDatum& c);

struct Word {
  std::vector<int> letters;  // values 1..n

  int size() const { return static_cast<int>(letters.size()); }
  int at(int pos) const { return letters[pos - 1]; }  // 1-based
  auto operator<=>(const Word&) const = default;
};

Word parse_word(const std::string& text);  // whitespace or comma separated
std::string word_str(const Word& w);

// A Weyl group element represented by its integer action on the weight
// lattice (fundamental-weight basis); the root-lattice action and the
// length are carried along.
struct WeylElement {
  IntMatrix wt;  // action on weight lattice, column-vector convention
  IntMatrix rt;  // action on root lattice (simple-root basis)
  int length = 0;

  bool operator==(const WeylElement& o) const { return wt == o.wt; }
};

WeylElement identity_element(const CartanDatum& c);
WeylElement simple_reflection(const CartanDatum& c, int i);
WeylElement multiply(const CartanDatum& c, const WeylElement& a, const WeylElement& b);
int element_length(const CartanDatum& c, const IntMatrix& rt);

struct WordProps {
  WeylElement element;
  bool reduced;
  int length;  // length of the element
};

WordProps word_props(const CartanDatum& c, const Word& w);

WeylElement longest_element(const CartanDatum& c);

// Emits each reduced word of w exactly once in lexicographic order; the
// callback returns false to stop early.
void reduced_words(const CartanDatum& c, const WeylElement& w,
                   const std::function<bool(const Word&)>& emit);
std::vector<Word> reduced_words(const CartanDatum& c, const WeylElement& w,
                                std::optional<std::size_t> limit);

enum class MoveKind { TwoTerm, ThreeTerm };

struct Move {
  MoveKind kind;
  int pos;  // 1-based; a 3-term move at position k rewrites entries k-1,k,k+1
  auto operator<=>(const Move&) const = default;
};

struct MoveSequence {
  Word source;
  Word target;
  std::vector<Move> moves;
};

Word apply_move(const CartanDatum& c, const Word& w, Move m);

// All words one move away, paired with the move, sorted by resulting word.
std::vector<std::pair<Word, Move>> word_neighbors(const CartanDatum& c, const Word& w);

// Shortest move sequence from i to j (breadth-first over the word graph,
// ties broken towards the lexicographically smallest next word).
MoveSequence move_path(const CartanDatum& c, const Word& i, const Word& j);

// beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) in simple-root coordinates.
std::vector<IntVector> convex_order(const CartanDatum& c, const Word& i);

int k_plus(const Word& i, int k);  // 1-based; N+1 when the letter never recurs
int i_star(const CartanDatum& c, int letter);

struct CosetData {
  Word parabolic_longest;  // longest element of the parabolic without `letter`
  Word u;                  // minimal representative of (parabolic) s_letter w0
};

CosetData coset_data(const CartanDatum& c, int letter);

bool is_minuscule(const CartanDatum& c, int letter);

}  // namespace stringcone
