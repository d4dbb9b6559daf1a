#include "stream_runner.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "dynfpt/dyn_chromatic.hpp"
#include "dynfpt/dyn_cvd_exact.hpp"
#include "dynfpt/dyn_cvd_kernel.hpp"
#include "dynfpt/dyn_fvs.hpp"
#include "dynfpt/dyn_vc.hpp"
#include "dynfpt/solvers.hpp"

namespace dynfpt::cli {

namespace {

struct Record {
  enum class Kind { Update, Query };
  std::size_t line = 0;
  Kind kind = Kind::Update;
  EdgeOp op{};
  std::string problem;
};

struct Stream {
  std::size_t n = 0;
  std::vector<Record> records;
};

class LineError : public std::runtime_error {
 public:
  LineError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw LineError(line, std::string(to_string(Errc::ParseError)) + ": expected an integer, got '" + tok + "'");
  }
  return value;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw LineError(line, std::string(to_string(Errc::ParseError)) + ": " + what);
}

bool skip(const std::vector<std::string>& tokens) { return tokens.empty() || tokens[0][0] == '#'; }

Vertex parse_vertex(const std::string& tok, std::size_t n, std::size_t line) {
  const long long v = parse_int(tok, line);
  if (v < 0 || static_cast<std::size_t>(v) >= n) {
    throw LineError(line, std::string(to_string(Errc::OutOfRange)) + ": vertex " + tok + " outside 0.." +
                              std::to_string(static_cast<long long>(n) - 1));
  }
  return static_cast<Vertex>(v);
}

Stream parse_stream(std::istream& in) {
  Stream s;
  bool header = false;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line) {
    const auto tokens = split(text);
    if (skip(tokens)) continue;
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "n") parse_fail(line, "expected header 'n <count>'");
      const long long n = parse_int(tokens[1], line);
      if (n < 0) parse_fail(line, "negative vertex count");
      s.n = static_cast<std::size_t>(n);
      header = true;
      continue;
    }
    Record r;
    r.line = line;
    if (tokens[0] == "+" || tokens[0] == "-") {
      if (tokens.size() != 3) parse_fail(line, "expected '" + tokens[0] + " u v'");
      const Vertex u = parse_vertex(tokens[1], s.n, line);
      const Vertex v = parse_vertex(tokens[2], s.n, line);
      r.op = tokens[0] == "+" ? EdgeOp::insert(u, v) : EdgeOp::erase(u, v);
    } else if (tokens[0] == "?") {
      if (tokens.size() != 2) parse_fail(line, "expected '? <problem>'");
      const auto& known = known_problems();
      if (std::find(known.begin(), known.end(), tokens[1]) == known.end()) {
        parse_fail(line, "unknown problem '" + tokens[1] + "'");
      }
      r.kind = Record::Kind::Query;
      r.problem = tokens[1];
    } else {
      parse_fail(line, "unknown record '" + tokens[0] + "'");
    }
    s.records.push_back(std::move(r));
  }
  // A stream with no records at all needs no header.
  return s;
}

std::string join(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

struct Answer {
  std::size_t value = 0;
  std::optional<VertexSet> solution;
};

// The selected structures, fed the same update stream.
class Session {
 public:
  Session(std::size_t n, const std::vector<std::string>& problems, std::optional<std::size_t> max_degree,
          bool static_mode)
      : g_(n), static_(static_mode), max_degree_(max_degree) {
    for (const auto& p : problems) {
      if (p == "fvs" && !max_degree) throw Error(Errc::InvalidOp, "problem fvs needs --max-degree");
      selected_.push_back(p);
      if (static_) continue;
      if (p == "vc") vc_ = std::make_unique<DynVc>(n);
      if (p == "cvd") cvd_ = std::make_unique<DynCvdKernel>(n);
      if (p == "cvd-exact") exact_ = std::make_unique<DynCvdExact>(n);
      if (p == "chromatic") chromatic_ = std::make_unique<DynChromatic>(n);
      if (p == "fvs") fvs_ = std::make_unique<DynFvs>(n, *max_degree);
    }
  }

  void update(const EdgeOp& op) {
    // Reject on the shadow graph first so no structure sees a bad update.
    g_.validate(op);
    if (op.is_insert() && max_degree_ && is_selected("fvs")) {
      for (Vertex v : {op.u, op.v}) {
        if (g_.degree(v) + 1 > *max_degree_) {
          throw Error(Errc::DegreeBoundExceeded,
                      "vertex " + std::to_string(v) + " would exceed degree " + std::to_string(*max_degree_));
        }
      }
    }
    g_.apply(op);
    if (vc_) vc_->update(op);
    if (cvd_) cvd_->update(op);
    if (exact_) exact_->update(op);
    if (chromatic_) chromatic_->update(op);
    if (fvs_) fvs_->update(op);
  }

  Answer query(const std::string& p) const {
    if (!is_selected(p)) throw Error(Errc::InvalidOp, "problem " + p + " is not selected");
    if (p == "chromatic") {
      return {static_cast<std::size_t>(static_ ? chromatic_exact(g_) : chromatic_->chromatic_number()), {}};
    }
    VertexSet s;
    if (p == "vc") s = static_ ? *vc_exact(g_) : vc_->query();
    if (p == "cvd") s = static_ ? *cvd_exact(g_) : cvd_->query();
    if (p == "cvd-exact") s = static_ ? *cvd_exact(g_) : exact_->solution();
    if (p == "fvs") s = static_ ? *fvs_exact(g_) : fvs_->solution();
    return {s.size(), s};
  }

 private:
  bool is_selected(const std::string& p) const {
    return std::find(selected_.begin(), selected_.end(), p) != selected_.end();
  }

  Graph g_;
  bool static_;
  std::optional<std::size_t> max_degree_;
  std::vector<std::string> selected_;
  std::unique_ptr<DynVc> vc_;
  std::unique_ptr<DynCvdKernel> cvd_;
  std::unique_ptr<DynCvdExact> exact_;
  std::unique_ptr<DynChromatic> chromatic_;
  std::unique_ptr<DynFvs> fvs_;
};

std::vector<std::string> selection(const Stream& s, const ReplayOptions& options) {
  const auto& known = known_problems();
  std::vector<std::string> out;
  if (!options.problems.empty()) {
    for (const auto& p : options.problems) {
      if (std::find(known.begin(), known.end(), p) == known.end()) {
        throw Error(Errc::InvalidOp, "unknown problem '" + p + "'");
      }
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
  }
  for (const auto& p : known) {
    for (const auto& r : s.records) {
      if (r.kind == Record::Kind::Query && r.problem == p) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

}  // namespace

const std::vector<std::string>& known_problems() {
  static const std::vector<std::string> problems{"vc", "cvd", "cvd-exact", "chromatic", "fvs"};
  return problems;
}

int replay(std::istream& in, std::ostream& out, std::ostream& err, const ReplayOptions& options) {
  try {
    const Stream stream = parse_stream(in);
    Session session(stream.n, selection(stream, options), options.max_degree, options.static_mode);
    out << "index,op,u,v,problem,answer,micros";
    if (options.cumulative) out << ",cumulative_micros";
    if (options.verbose) out << ",solution";
    out << '\n';
    long long total = 0;
    for (std::size_t i = 0; i < stream.records.size(); ++i) {
      const Record& r = stream.records[i];
      const auto start = std::chrono::steady_clock::now();
      Answer answer;
      try {
        if (r.kind == Record::Kind::Update) {
          session.update(r.op);
        } else {
          answer = session.query(r.problem);
        }
      } catch (const Error& e) {
        throw LineError(r.line, e.what());
      } catch (const InvariantError& e) {
        throw InvariantError("line " + std::to_string(r.line) + ": " + e.what());
      }
      const long long micros =
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
      total += micros;
      out << i << ',';
      if (r.kind == Record::Kind::Update) {
        out << (r.op.is_insert() ? '+' : '-') << ',' << r.op.u << ',' << r.op.v << ",,";
      } else {
        out << "?,,," << r.problem << ',' << answer.value;
      }
      out << ',' << micros;
      if (options.cumulative) out << ',' << total;
      if (options.verbose) out << ',' << (answer.solution ? join(*answer.solution) : "");
      out << '\n';
    }
    return kExitOk;
  } catch (const LineError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

int kernelize_cvd(std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    std::string text;
    std::size_t line = 0;
    auto next_tokens = [&]() -> std::optional<std::vector<std::string>> {
      while (std::getline(in, text)) {
        ++line;
        auto tokens = split(text);
        if (!skip(tokens)) return tokens;
      }
      return std::nullopt;
    };
    const auto header = next_tokens();
    if (!header || header->size() != 2) parse_fail(std::max<std::size_t>(line, 1), "expected header 'n m'");
    const long long n = parse_int((*header)[0], line);
    const long long m = parse_int((*header)[1], line);
    if (n < 0 || m < 0) parse_fail(line, "negative count");

    DynCvdKernel st(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
      const auto tokens = next_tokens();
      if (!tokens) parse_fail(line + 1, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
      if (tokens->size() != 2) parse_fail(line, "expected 'u v'");
      const Vertex u = parse_vertex((*tokens)[0], static_cast<std::size_t>(n), line);
      const Vertex v = parse_vertex((*tokens)[1], static_cast<std::size_t>(n), line);
      try {
        st.update(EdgeOp::insert(u, v));
      } catch (const Error& e) {
        throw LineError(line, e.what());
      }
    }
    if (next_tokens()) parse_fail(line, "trailing input after " + std::to_string(m) + " edges");

    const Kernel k = st.kernel();
    out << "forced";
    for (Vertex v : k.forced) out << ' ' << v;
    out << "\nkernel " << k.reduced.graph.vertex_count() << ' ' << k.reduced.graph.edge_count() << '\n';
    for (auto [a, b] : k.reduced.graph.edges()) out << k.reduced.original[a] << ' ' << k.reduced.original[b] << '\n';
    return kExitOk;
  } catch (const LineError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace dynfpt::cli
