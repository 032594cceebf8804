#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratbase/fourier.hpp"
#include "ratbase/numeration.hpp"
#include "ratbase/patterns.hpp"
#include "ratbase/report.hpp"
#include "ratbase/tiles.hpp"
#include "ratbase/verify.hpp"

using namespace ratbase;

namespace {

constexpr int kExitNotInLanguage = 2;
constexpr int kExitScale = 3;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts plain integers and scientific notation such as 1e6 or 2.5e4.
std::uint64_t parse_count(const std::string& text) {
  std::size_t pos = 0;
  if (text.find_first_of("eE.") == std::string::npos) {
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &pos);
    } catch (const std::exception&) {
      throw UsageError("not a count: '" + text + "'");
    }
    if (pos != text.size() || text[0] == '-') throw UsageError("not a count: '" + text + "'");
    return v;
  }
  double v = 0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a count: '" + text + "'");
  }
  if (pos != text.size() || v < 0 || v != std::floor(v) || v > 1.8e19) throw UsageError("not a count: '" + text + "'");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

// "-5/2..10/2" steps by 1/q with q the denominator as written on the left;
// otherwise a comma separated list of rationals.
std::vector<Rational> parse_translates(const std::string& text) {
  std::vector<Rational> out;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
    return out;
  }
  std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
  Rational lo = parse_rational(lo_text), hi = parse_rational(hi_text);
  auto slash = lo_text.find('/');
  BigInt q = slash == std::string::npos ? BigInt(1) : BigInt(lo_text.substr(slash + 1));
  Rational step(1, q);
  if (hi < lo) throw UsageError("empty translate range");
  if ((hi - lo) / step > 100000) throw UsageError("translate range too long");
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

// Writes to --out when given, else to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct Options {
  std::int64_t a = 3, b = 2;
  std::string N, w, horizons, translates = "0", format, out, suite = "all", scheme = "alpha-digits", number;
  int k = 0, r = 1, resolution = 0, d = 0;
  std::int64_t cutoff = 0, max_xi = 10;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

int run_encode(const Options& o) {
  Base base(o.a, o.b);
  BigInt n;
  try {
    n = BigInt(o.number);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + o.number + "'");
  }
  if (n < 0) throw UsageError("encode needs n >= 0");
  std::cout << format_word(encode(base, n)) << '\n';
  return 0;
}

int run_decode(const Options& o) {
  Base base(o.a, o.b);
  std::cout << decode(parse_word(base, o.number)) << '\n';
  return 0;
}

int run_patterns(const Options& o) {
  Base base(o.a, o.b);
  if (o.w.empty()) throw UsageError("patterns needs --w");
  Pattern w(base, parse_digits(base, o.w));
  std::vector<std::uint64_t> horizons;
  if (!o.horizons.empty())
    for (const auto& h : split(o.horizons, ',')) horizons.push_back(parse_count(h));
  else if (!o.N.empty())
    horizons.push_back(parse_count(o.N));
  else
    throw UsageError("patterns needs --N or --horizons");
  auto rows = asymptotic_report(w, horizons, o.threads);
  Sink sink(o.out);
  if (o.format == "json")
    write_report_json(sink.stream(), rows);
  else if (o.format.empty() || o.format == "csv")
    write_report_csv(sink.stream(), rows);
  else
    throw UsageError("patterns supports --format csv or json");
  return 0;
}

int run_sod(const Options& o) {
  Base base(o.a, o.b);
  if (o.N.empty()) throw UsageError("sod-sum needs --N");
  std::cout << summatory_sod(base, parse_count(o.N), o.threads) << '\n';
  return 0;
}

int run_stream(const Options& o) {
  Base base(o.a, o.b);
  if (o.N.empty()) throw UsageError("champernowne needs --N");
  auto digits = champernowne_digits(base, parse_count(o.N));
  Sink sink(o.out);
  if (base.uses_plain_digits()) {
    for (Digit d : digits) sink.stream() << static_cast<char>('0' + d);
    sink.stream() << '\n';
  } else {
    for (std::size_t i = 0; i < digits.size(); ++i) sink.stream() << (i ? "," : "") << digits[i];
    sink.stream() << '\n';
  }
  return 0;
}

int run_tiles(const Options& o) {
  AdeleContext ctx(Base(o.a, o.b));
  auto rects = render_tiles(ctx, o.r, parse_translates(o.translates), parse_fiber_scheme(o.scheme));
  std::string format = o.format;
  if (format.empty()) format = o.out.size() >= 4 && o.out.substr(o.out.size() - 4) == ".csv" ? "csv" : "svg";
  Sink sink(o.out);
  if (format == "svg")
    write_tiles_svg(sink.stream(), ctx, o.r, rects);
  else if (format == "csv")
    write_tiles_csv(sink.stream(), rects);
  else
    throw UsageError("tiles supports --format svg or csv");
  return 0;
}

int run_fourier(const Options& o) {
  AdeleContext ctx(Base(o.a, o.b));
  if (o.d < 0 || o.d >= o.a) throw UsageError("--d outside the digit alphabet");
  auto rows = coefficient_table(ctx, static_cast<Digit>(o.d), o.r, o.max_xi);
  Sink sink(o.out);
  write_coefficients_csv(sink.stream(), ctx, static_cast<Digit>(o.d), o.r, rows);
  return 0;
}

int run_series(const Options& o) {
  AdeleContext ctx(Base(o.a, o.b));
  if (o.d < 0 || o.d >= o.a) throw UsageError("--d outside the digit alphabet");
  Rational z = parse_rational(o.number);
  std::int64_t cutoff = o.cutoff > 0 ? o.cutoff : 1000;
  SeriesValue s = eval_urysohn_series(ctx, static_cast<Digit>(o.d), o.r, z, cutoff);
  Rational direct = eval_urysohn_direct(ctx, static_cast<Digit>(o.d), o.r, z);
  std::cout << "direct," << to_string(direct) << '\n'
            << "series_re," << format_double(s.value.real()) << '\n'
            << "series_im," << format_double(s.value.imag()) << '\n'
            << "tail_bound," << format_double(s.tail_bound) << '\n';
  return 0;
}

int run_boundary(const Options& o) {
  AdeleContext ctx(Base(o.a, o.b));
  int resolution = o.resolution > 0 ? o.resolution : o.r + 8;
  std::cout << "digit,r,resolution,members,period_count\n";
  for (std::int64_t d = 0; d < o.a; ++d) {
    BoundaryTube t = boundary_tube(ctx, static_cast<Digit>(d), o.r, resolution);
    std::cout << d << ',' << o.r << ',' << resolution << ',' << t.count() << ',' << t.period_count() << '\n';
  }
  BoundaryTube whole = tile_boundary_tube(ctx, o.r, resolution);
  std::cout << "all," << o.r << ',' << resolution << ',' << whole.count() << ',' << whole.period_count() << '\n';
  return 0;
}

int run_verify(const Options& o) {
  AdeleContext ctx(Base(o.a, o.b));
  VerifyOptions opt;
  opt.r = o.r;
  opt.seed = o.seed;
  opt.threads = o.threads;
  if (o.resolution > 0) opt.resolution_margin = std::max(1, o.resolution - o.r);
  if (!o.N.empty()) opt.N = parse_count(o.N);
  bool ok = true;
  for (const auto& line : run_suite(ctx, o.suite, opt)) {
    std::cout << line.format() << '\n';
    ok = ok && line.pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational base number systems: digits, pattern statistics, tiles and Fourier coefficients"};
  app.require_subcommand(1);
  Options o;

  auto base_flags = [&](CLI::App* cmd) {
    cmd->add_option("--a", o.a, "numerator of the base")->required();
    cmd->add_option("--b", o.b, "denominator of the base")->required();
  };

  auto* encode_cmd = app.add_subcommand("encode", "digits of a nonnegative integer");
  base_flags(encode_cmd);
  encode_cmd->add_option("n", o.number, "integer")->required();

  auto* decode_cmd = app.add_subcommand("decode", "integer value of a digit word");
  base_flags(decode_cmd);
  decode_cmd->add_option("word", o.number, "digit word")->required();

  auto* patterns_cmd = app.add_subcommand("patterns", "occurrence counts S_w(N) with the asymptotic main term");
  base_flags(patterns_cmd);
  patterns_cmd->add_option("--w", o.w, "pattern, most significant digit first");
  patterns_cmd->add_option("--N", o.N, "horizon");
  patterns_cmd->add_option("--horizons", o.horizons, "comma separated horizons, e.g. 1e4,1e5");
  patterns_cmd->add_option("--format", o.format, "csv or json");
  patterns_cmd->add_option("--out", o.out, "output file");
  patterns_cmd->add_option("--threads", o.threads, "worker threads");

  auto* sod_cmd = app.add_subcommand("sod-sum", "sum of digit sums over 1..N");
  base_flags(sod_cmd);
  sod_cmd->add_option("--N", o.N, "horizon");
  sod_cmd->add_option("--threads", o.threads, "worker threads");

  auto* stream_cmd = app.add_subcommand("champernowne", "first N digits of the concatenated stream");
  base_flags(stream_cmd);
  stream_cmd->add_option("--N", o.N, "number of digits");
  stream_cmd->add_option("--out", o.out, "output file");

  auto* tiles_cmd = app.add_subcommand("tiles", "render level-r approximations of the tiles");
  base_flags(tiles_cmd);
  tiles_cmd->add_option("--r", o.r, "level");
  tiles_cmd->add_option("--translates", o.translates, "lo..hi (step 1/denominator of lo) or a comma list");
  tiles_cmd->add_option("--scheme", o.scheme, "alpha-digits or p-adic-digits");
  tiles_cmd->add_option("--format", o.format, "svg or csv");
  tiles_cmd->add_option("--out", o.out, "output file");

  auto* fourier_cmd = app.add_subcommand("fourier", "Fourier coefficients of f_{d,r}");
  base_flags(fourier_cmd);
  fourier_cmd->add_option("--d", o.d, "digit");
  fourier_cmd->add_option("--r", o.r, "level");
  fourier_cmd->add_option("--max-xi", o.max_xi, "largest |xi b^r|");
  fourier_cmd->add_option("--out", o.out, "output file");

  auto* series_cmd = app.add_subcommand("series", "truncated Fourier series of f_{d,r} at a rational point");
  base_flags(series_cmd);
  series_cmd->add_option("z", o.number, "rational point")->required();
  series_cmd->add_option("--d", o.d, "digit");
  series_cmd->add_option("--r", o.r, "level");
  series_cmd->add_option("--cutoff", o.cutoff, "include |xi b^r| <= cutoff");

  auto* boundary_cmd = app.add_subcommand("boundary", "boundary tube sizes");
  base_flags(boundary_cmd);
  boundary_cmd->add_option("--r", o.r, "level");
  boundary_cmd->add_option("--resolution", o.resolution, "refinement level (default r+8)");

  auto* verify_cmd = app.add_subcommand("verify", "run invariant suites");
  base_flags(verify_cmd);
  verify_cmd->add_option("--suite", o.suite, "tiling, numeration, fourier, boundary, digits or all");
  verify_cmd->add_option("--r", o.r, "level");
  verify_cmd->add_option("--N", o.N, "horizon for the numeration and digit suites");
  verify_cmd->add_option("--resolution", o.resolution, "tube refinement level");
  verify_cmd->add_option("--seed", o.seed, "random seed");
  verify_cmd->add_option("--threads", o.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*encode_cmd) return run_encode(o);
    if (*decode_cmd) return run_decode(o);
    if (*patterns_cmd) return run_patterns(o);
    if (*sod_cmd) return run_sod(o);
    if (*stream_cmd) return run_stream(o);
    if (*tiles_cmd) return run_tiles(o);
    if (*fourier_cmd) return run_fourier(o);
    if (*series_cmd) return run_series(o);
    if (*boundary_cmd) return run_boundary(o);
    if (*verify_cmd) return run_verify(o);
  } catch (const NotInLanguage& e) {
    std::cerr << "not in language: " << e.what() << '\n';
    return kExitNotInLanguage;
  } catch (const ScaleExceeded& e) {
    std::cerr << "scale exceeded: " << e.what() << '\n';
    return kExitScale;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
