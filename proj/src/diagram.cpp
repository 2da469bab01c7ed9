#include "polyknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <regex>

#include "polyknot/errors.hpp"

namespace polyknot {

Diagram Diagram::from_passes(std::vector<Pass> sequence, std::vector<int> signs, std::size_t arc_count) {
  const std::size_t c = signs.size();
  if (sequence.size() != 2 * c) throw Error(ErrorKind::InvalidArgument, "a diagram visits every crossing twice");
  std::vector<int> overs(c, 0);
  std::vector<int> unders(c, 0);
  for (const Pass& p : sequence) {
    if (p.crossing < 0 || static_cast<std::size_t>(p.crossing) >= c) {
      throw Error(ErrorKind::InvalidArgument, "crossing id out of range");
    }
    (p.over ? overs : unders)[static_cast<std::size_t>(p.crossing)]++;
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (overs[i] != 1 || unders[i] != 1) {
      throw Error(ErrorKind::InvalidArgument, "each crossing needs exactly one over and one under visit");
    }
    if (signs[i] != 1 && signs[i] != -1) throw Error(ErrorKind::InvalidArgument, "crossing signs must be +-1");
  }
  Diagram d;
  d.passes_ = std::move(sequence);
  d.signs_ = std::move(signs);
  d.arc_count_ = arc_count;
  return d;
}

Diagram Diagram::from_gauss(const std::vector<int>& gauss, const std::vector<int>& signs) {
  std::vector<Pass> seq;
  seq.reserve(gauss.size());
  for (int g : gauss) {
    if (g == 0) throw Error(ErrorKind::InvalidArgument, "Gauss code entries are nonzero");
    seq.push_back({std::abs(g) - 1, g > 0});
  }
  return from_passes(std::move(seq), signs);
}

Diagram Diagram::from_pd(const std::vector<std::array<int, 4>>& pd) {
  const std::size_t c = pd.size();
  if (c == 0) return {};
  const int labels = static_cast<int>(2 * c);
  std::vector<int> uses(static_cast<std::size_t>(labels) + 1, 0);
  for (const auto& x : pd) {
    for (int l : x) {
      if (l < 1 || l > labels) throw Error(ErrorKind::ParseError, "PD label out of range 1..2c");
      uses[static_cast<std::size_t>(l)]++;
    }
  }
  for (int l = 1; l <= labels; ++l) {
    if (uses[static_cast<std::size_t>(l)] != 2) throw Error(ErrorKind::ParseError, "every PD label must appear twice");
  }
  const auto next = [&](int l) { return l % labels + 1; };
  const auto position_of_incoming = [&](int l) { return static_cast<std::size_t>(l % labels); };

  std::vector<Pass> seq(2 * c, Pass{-1, false});
  std::vector<int> signs(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    const auto [a, b, cc, d] = pd[i];
    if (cc != next(a)) throw Error(ErrorKind::ParseError, "PD under-strand labels must be consecutive");
    int sign = 0;
    if (labels == 2) {
      sign = (b == a) ? 1 : -1;
    } else if (b == next(d)) {
      sign = 1;
    } else if (d == next(b)) {
      sign = -1;
    } else {
      throw Error(ErrorKind::ParseError, "PD over-strand labels must be consecutive");
    }
    signs[i] = sign;
    const int over_in = sign > 0 ? d : b;
    auto& under_slot = seq[position_of_incoming(a)];
    auto& over_slot = seq[position_of_incoming(over_in)];
    if (under_slot.crossing != -1 || over_slot.crossing != -1) {
      throw Error(ErrorKind::ParseError, "PD code visits a position twice");
    }
    under_slot = {static_cast<int>(i), false};
    over_slot = {static_cast<int>(i), true};
  }
  return from_passes(std::move(seq), std::move(signs));
}

Diagram Diagram::from_braid(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error(ErrorKind::InvalidArgument, "braid needs at least one strand");
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) >= strands) throw Error(ErrorKind::InvalidArgument, "braid letter out of range");
  }
  std::vector<int> signs;
  for (int letter : word) signs.push_back(letter > 0 ? 1 : -1);

  // Strands run downward with positions increasing to the right. In sigma_i
  // the strand starting at position i+1 passes over, giving a positive
  // crossing.
  std::vector<Pass> seq;
  int pos = 1;
  std::size_t rounds = 0;
  do {
    for (std::size_t t = 0; t < word.size(); ++t) {
      const int i = std::abs(word[t]);
      if (pos != i && pos != i + 1) continue;
      const bool from_right = (pos == i + 1);
      const bool over = (word[t] > 0) == from_right;
      seq.push_back({static_cast<int>(t), over});
      pos = from_right ? i : i + 1;
    }
    ++rounds;
  } while (pos != 1 && rounds <= static_cast<std::size_t>(strands));
  if (seq.size() != 2 * word.size()) throw Error(ErrorKind::InvalidArgument, "braid closure is not a knot");
  return from_passes(std::move(seq), std::move(signs));
}

std::vector<Diagram::Crossing> Diagram::crossings() const {
  std::vector<Crossing> out(signs_.size());
  for (std::size_t p = 0; p < passes_.size(); ++p) {
    auto& x = out[static_cast<std::size_t>(passes_[p].crossing)];
    (passes_[p].over ? x.over_position : x.under_position) = p;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].sign = signs_[i];
  return out;
}

int Diagram::writhe() const { return std::accumulate(signs_.begin(), signs_.end(), 0); }

std::vector<int> Diagram::gauss_code() const {
  std::vector<int> out;
  out.reserve(passes_.size());
  for (const Pass& p : passes_) out.push_back(p.over ? p.crossing + 1 : -(p.crossing + 1));
  return out;
}

std::vector<std::array<int, 4>> Diagram::pd_code() const {
  const int labels = static_cast<int>(passes_.size());
  const auto in = [&](std::size_t p) { return p == 0 ? labels : static_cast<int>(p); };
  const auto out = [&](std::size_t p) { return static_cast<int>(p) + 1; };
  std::vector<std::array<int, 4>> pd;
  pd.reserve(signs_.size());
  for (const Crossing& x : crossings()) {
    const std::size_t u = x.under_position;
    const std::size_t o = x.over_position;
    if (x.sign > 0) {
      pd.push_back({in(u), out(o), out(u), in(o)});
    } else {
      pd.push_back({in(u), in(o), out(u), out(o)});
    }
  }
  return pd;
}

std::string Diagram::gauss_string() const {
  std::string s;
  for (int g : gauss_code()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(g);
  }
  return s;
}

std::string Diagram::signs_string() const {
  std::string s;
  for (int g : signs_) {
    if (!s.empty()) s += ' ';
    s += g > 0 ? '+' : '-';
  }
  return s;
}

std::string Diagram::pd_string() const {
  std::string s;
  for (const auto& x : pd_code()) {
    if (!s.empty()) s += ' ';
    s += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
         std::to_string(x[3]) + "]";
  }
  return s;
}

Diagram Diagram::mirrored() const {
  Diagram d = *this;
  for (Pass& p : d.passes_) p.over = !p.over;
  for (int& s : d.signs_) s = -s;
  return d;
}

Diagram Diagram::with_kink(std::size_t position, int sign, bool over_first) const {
  if (position > passes_.size()) throw Error(ErrorKind::IndexOutOfRange, "kink position past the end");
  const int id = static_cast<int>(signs_.size());
  std::vector<Pass> seq = passes_;
  seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(position), {{id, over_first}, {id, !over_first}});
  std::vector<int> signs = signs_;
  signs.push_back(sign);
  return from_passes(std::move(seq), std::move(signs), arc_count_);
}

std::vector<std::array<int, 4>> parse_pd(const std::string& text) {
  static const std::regex crossing_re(R"(X\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
  std::vector<std::array<int, 4>> pd;
  std::string residue;
  auto it = std::sregex_iterator(text.begin(), text.end(), crossing_re);
  std::size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    residue += text.substr(last, static_cast<std::size_t>(m.position()) - last);
    last = static_cast<std::size_t>(m.position() + m.length());
    pd.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
  }
  residue += text.substr(last);
  for (char ch : residue) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != ',' && ch != '[' && ch != ']' && ch != 'P' &&
        ch != 'D') {
      throw Error(ErrorKind::ParseError, "unexpected text in PD code");
    }
  }
  if (pd.empty() && residue.find("PD") == std::string::npos) {
    throw Error(ErrorKind::ParseError, "no crossings found in PD code");
  }
  return pd;
}

}  // namespace polyknot
