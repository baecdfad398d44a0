#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cob/rng.hpp"
#include "cob/triplet.hpp"

namespace cob {

// Blow up: a new +-1 framed split unknot component.
struct Stabilize {
  int sign = 1;  // +1 or -1
  bool operator==(const Stabilize&) const = default;
};

// Blow down component `index` (0-based); its row in the link block must be
// (0,...,+-1,...,0) with zero graph linking.
struct Destabilize {
  std::size_t index = 0;
  bool operator==(const Destabilize&) const = default;
};

// Handle slide of link component `moving` over `over`, with sign.
struct SlideLinkOverLink {
  std::size_t moving = 0;
  std::size_t over = 0;
  int sign = 1;
  bool operator==(const SlideLinkOverLink&) const = default;
};

enum class GraphSide { Bottom, Top };

// Handle slide of a graph circle arc over a link component.
struct SlideGraphOverLink {
  GraphSide side = GraphSide::Bottom;
  std::size_t circle = 0;  // graph circle index on that side
  std::size_t over = 0;    // link component index
  int sign = 1;
  bool operator==(const SlideGraphOverLink&) const = default;
};

// Reverse the orientation of link component `index`.
struct FlipOrientation {
  std::size_t index = 0;
  bool operator==(const FlipOrientation&) const = default;
};

using KirbyMove = std::variant<Stabilize, Destabilize, SlideLinkOverLink,
                               SlideGraphOverLink, FlipOrientation>;

namespace detail {

inline void check_link_index(const TripletPresentation& t, std::size_t j,
                             const char* what) {
  if (j >= t.n_link)
    throw DimensionError(std::string(what) + ": link index out of range");
}

inline bool destabilize_legal(const TripletPresentation& t, std::size_t j) {
  if (j >= t.n_link) return false;
  if (abs_of(t.link(j, j)) != 1) return false;
  for (std::size_t k = 0; k < t.n_link; ++k)
    if (k != j && t.link(j, k) != 0) return false;
  for (std::size_t k = 0; k < t.g_bottom; ++k)
    if (t.bottom_link(k, j) != 0) return false;
  for (std::size_t k = 0; k < t.g_top; ++k)
    if (t.top_link(k, j) != 0) return false;
  return true;
}

inline IntMatrix without_col(const IntMatrix& m, std::size_t cj) {
  IntMatrix r(m.rows(), m.cols() - 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0, dj = 0; j < m.cols(); ++j) {
      if (j == cj) continue;
      r(i, dj++) = m(i, j);
    }
  return r;
}

}  // namespace detail

/// Apply one move; the input is unchanged. Every move preserves the
/// presented cobordism, so all homological and classification data factor
/// through the result.
inline TripletPresentation apply_move(const TripletPresentation& t, const KirbyMove& move) {
  require_valid(t);
  TripletPresentation r = t;

  if (const auto* m = std::get_if<Stabilize>(&move)) {
    if (m->sign != 1 && m->sign != -1)
      throw DimensionError("stabilize: sign must be +1 or -1");
    const std::size_t n = t.n_link;
    r.n_link = n + 1;
    IntMatrix a(n + 1, n + 1);
    a.set_block(0, 0, t.link);
    a(n, n) = m->sign;
    r.link = std::move(a);
    IntMatrix b(t.g_bottom, n + 1);
    b.set_block(0, 0, t.bottom_link);
    r.bottom_link = std::move(b);
    IntMatrix c(t.g_top, n + 1);
    c.set_block(0, 0, t.top_link);
    r.top_link = std::move(c);
    return r;
  }

  if (const auto* m = std::get_if<Destabilize>(&move)) {
    detail::check_link_index(t, m->index, "destabilize");
    if (!detail::destabilize_legal(t, m->index))
      throw ValidationError("invalid destabilization target: component is not a split +-1 unknot");
    r.n_link = t.n_link - 1;
    r.link = t.link.without_row_col(m->index, m->index);
    r.bottom_link = detail::without_col(t.bottom_link, m->index);
    r.top_link = detail::without_col(t.top_link, m->index);
    return r;
  }

  if (const auto* m = std::get_if<SlideLinkOverLink>(&move)) {
    detail::check_link_index(t, m->moving, "slide");
    detail::check_link_index(t, m->over, "slide");
    if (m->moving == m->over)
      throw DimensionError("slide: a component cannot slide over itself");
    if (m->sign != 1 && m->sign != -1)
      throw DimensionError("slide: sign must be +1 or -1");
    const Int e(m->sign);
    // link <- E link E^T, graph blocks <- blocks E^T, E = I + e*unit(moving,over)
    r.link.add_row_multiple(m->moving, m->over, e);
    r.link.add_col_multiple(m->moving, m->over, e);
    r.bottom_link.add_col_multiple(m->moving, m->over, e);
    r.top_link.add_col_multiple(m->moving, m->over, e);
    return r;
  }

  if (const auto* m = std::get_if<SlideGraphOverLink>(&move)) {
    detail::check_link_index(t, m->over, "graph slide");
    if (m->sign != 1 && m->sign != -1)
      throw DimensionError("graph slide: sign must be +1 or -1");
    const Int e(m->sign);
    const std::size_t k = m->circle;
    const std::size_t j = m->over;
    if (m->side == GraphSide::Bottom) {
      if (k >= t.g_bottom)
        throw DimensionError("graph slide: bottom circle index out of range");
      // Push-off bilinearity: the slid circle k picks up the linking data of
      // link component j. Self-framing gains 2e*lk(circle,j) + e^2*framing(j).
      for (std::size_t c = 0; c < t.g_bottom; ++c) {
        if (c == k) continue;
        r.bottom_bottom(k, c) += e * t.bottom_link(c, j);
        r.bottom_bottom(c, k) = r.bottom_bottom(k, c);
      }
      r.bottom_bottom(k, k) += 2 * e * t.bottom_link(k, j) + e * e * t.link(j, j);
      for (std::size_t c = 0; c < t.n_link; ++c)
        r.bottom_link(k, c) += e * t.link(j, c);
      for (std::size_t c = 0; c < t.g_top; ++c)
        r.top_bottom(c, k) += e * t.top_link(c, j);
    } else {
      if (k >= t.g_top)
        throw DimensionError("graph slide: top circle index out of range");
      for (std::size_t c = 0; c < t.g_top; ++c) {
        if (c == k) continue;
        r.top_top(k, c) += e * t.top_link(c, j);
        r.top_top(c, k) = r.top_top(k, c);
      }
      r.top_top(k, k) += 2 * e * t.top_link(k, j) + e * e * t.link(j, j);
      for (std::size_t c = 0; c < t.n_link; ++c)
        r.top_link(k, c) += e * t.link(j, c);
      for (std::size_t c = 0; c < t.g_bottom; ++c)
        r.top_bottom(k, c) += e * t.bottom_link(c, j);
    }
    return r;
  }

  const auto& m = std::get<FlipOrientation>(move);
  detail::check_link_index(t, m.index, "flip");
  r.link.negate_row(m.index);
  r.link.negate_col(m.index);
  r.bottom_link.negate_col(m.index);
  r.top_link.negate_col(m.index);
  return r;
}

/// Move-log text form, one move per line, 1-based indices:
///   stab +        stab -        destab 3
///   slide L 3 over 1 +          slide B 2 over 1 -
///   slide T 1 over 2 +          flip 2
inline std::string format_move(const KirbyMove& move) {
  std::ostringstream os;
  if (const auto* m = std::get_if<Stabilize>(&move)) {
    os << "stab " << (m->sign > 0 ? "+" : "-");
  } else if (const auto* m = std::get_if<Destabilize>(&move)) {
    os << "destab " << (m->index + 1);
  } else if (const auto* m = std::get_if<SlideLinkOverLink>(&move)) {
    os << "slide L " << (m->moving + 1) << " over " << (m->over + 1) << " "
       << (m->sign > 0 ? "+" : "-");
  } else if (const auto* m = std::get_if<SlideGraphOverLink>(&move)) {
    os << "slide " << (m->side == GraphSide::Bottom ? "B" : "T") << " "
       << (m->circle + 1) << " over " << (m->over + 1) << " "
       << (m->sign > 0 ? "+" : "-");
  } else {
    os << "flip " << (std::get<FlipOrientation>(move).index + 1);
  }
  return os.str();
}

inline KirbyMove parse_move(const std::string& line) {
  std::istringstream is(line);
  std::string word;
  if (!(is >> word)) throw ParseError("empty move line");

  auto read_index = [&is, &line]() -> std::size_t {
    long long v;
    if (!(is >> v) || v < 1)
      throw ParseError("bad index in move line: " + line);
    return static_cast<std::size_t>(v - 1);
  };
  auto read_sign = [&is, &line]() -> int {
    std::string s;
    if (!(is >> s) || (s != "+" && s != "-"))
      throw ParseError("bad sign in move line: " + line);
    return s == "+" ? 1 : -1;
  };
  auto expect_word = [&is, &line](const char* w) {
    std::string s;
    if (!(is >> s) || s != w)
      throw ParseError("malformed move line: " + line);
  };

  if (word == "stab") return Stabilize{read_sign()};
  if (word == "destab") return Destabilize{read_index()};
  if (word == "flip") return FlipOrientation{read_index()};
  if (word == "slide") {
    std::string kind;
    if (!(is >> kind)) throw ParseError("malformed move line: " + line);
    if (kind == "L") {
      std::size_t i = read_index();
      expect_word("over");
      std::size_t j = read_index();
      return SlideLinkOverLink{i, j, read_sign()};
    }
    if (kind == "B" || kind == "T") {
      std::size_t k = read_index();
      expect_word("over");
      std::size_t j = read_index();
      return SlideGraphOverLink{kind == "B" ? GraphSide::Bottom : GraphSide::Top,
                                k, j, read_sign()};
    }
    throw ParseError("unknown slide kind in move line: " + line);
  }
  throw ParseError("unknown move: " + line);
}

inline std::vector<KirbyMove> parse_move_log(const std::string& text) {
  std::vector<KirbyMove> moves;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    std::size_t end = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(begin, end - begin + 1);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    moves.push_back(parse_move(trimmed));
  }
  return moves;
}

inline std::string format_move_log(const std::vector<KirbyMove>& moves) {
  std::string out;
  for (const auto& m : moves) {
    out += format_move(m);
    out += "\n";
  }
  return out;
}

/// Deterministic fuzzing: `count` moves drawn uniformly from the legal moves
/// of each intermediate presentation, under the library RNG seeded with
/// `seed`. Destabilization is only drawn when a legal target exists.
inline std::pair<TripletPresentation, std::vector<KirbyMove>> random_moves(
    const TripletPresentation& start, std::uint64_t seed, std::size_t count) {
  require_valid(start);
  TripletPresentation t = start;
  std::vector<KirbyMove> log;
  SplitMix64 rng(seed);

  for (std::size_t step = 0; step < count; ++step) {
    const std::size_t n = t.n_link;
    const std::size_t circles = t.g_bottom + t.g_top;
    std::vector<std::size_t> destab_targets;
    for (std::size_t j = 0; j < n; ++j)
      if (detail::destabilize_legal(t, j)) destab_targets.push_back(j);

    const std::uint64_t n_stab = 2;
    const std::uint64_t n_destab = destab_targets.size();
    const std::uint64_t n_flip = n;
    const std::uint64_t n_slide_ll = n >= 2 ? std::uint64_t(n) * (n - 1) * 2 : 0;
    const std::uint64_t n_slide_gl = std::uint64_t(circles) * n * 2;
    const std::uint64_t total =
        n_stab + n_destab + n_flip + n_slide_ll + n_slide_gl;

    std::uint64_t pick = rng.below(total);
    KirbyMove move;
    if (pick < n_stab) {
      move = Stabilize{pick == 0 ? 1 : -1};
    } else if ((pick -= n_stab) < n_destab) {
      move = Destabilize{destab_targets[pick]};
    } else if ((pick -= n_destab) < n_flip) {
      move = FlipOrientation{pick};
    } else if ((pick -= n_flip) < n_slide_ll) {
      int sign = pick % 2 == 0 ? 1 : -1;
      std::uint64_t pair = pick / 2;
      std::size_t i = static_cast<std::size_t>(pair / (n - 1));
      std::size_t j = static_cast<std::size_t>(pair % (n - 1));
      if (j >= i) ++j;  // skip the diagonal
      move = SlideLinkOverLink{i, j, sign};
    } else {
      pick -= n_slide_ll;
      int sign = pick % 2 == 0 ? 1 : -1;
      std::uint64_t cell = pick / 2;
      std::size_t circle = static_cast<std::size_t>(cell / n);
      std::size_t over = static_cast<std::size_t>(cell % n);
      if (circle < t.g_bottom)
        move = SlideGraphOverLink{GraphSide::Bottom, circle, over, sign};
      else
        move = SlideGraphOverLink{GraphSide::Top, circle - t.g_bottom, over, sign};
    }

    t = apply_move(t, move);
    if (!validate(t).empty())
      throw InternalError("random_moves produced an invalid presentation");
    log.push_back(move);
  }
  return {std::move(t), std::move(log)};
}

}  // namespace cob
