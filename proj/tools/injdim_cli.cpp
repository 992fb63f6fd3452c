// Command-line front end: reads a JSON job, runs it and prints the report.

#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "injdim/job.hpp"

namespace {

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite injective dimension checks over finite-dimensional algebras"};
  std::string input = "-";
  std::optional<int> bound;
  std::optional<std::int64_t> seed;
  std::optional<std::string> format;
  std::optional<unsigned> jobs;
  std::optional<std::string> zoo;
  std::optional<std::size_t> count;
  bool timings = false;
  app.add_option("input", input, "job file, or - for standard input");
  app.add_option("--bound", bound, "resolution bound");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", jobs, "parallel sweep workers");
  app.add_option("--zoo", zoo, "comma-separated algebra names, e.g. \"ci(2;2,2),group(2;4)\"");
  app.add_option("--count", count, "random targets per algebra in a sweep");
  app.add_flag("--timings", timings, "include wall-clock timings (output is then not reproducible)");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream f(input);
    if (!f) {
      std::cerr << "error: cannot read " << input << '\n';
      return 1;
    }
    text = read_all(f);
  }

  injdim::JobSpec job;
  try {
    injdim::Json doc;
    try {
      doc = injdim::Json::parse(text);
    } catch (const injdim::Json::parse_error& e) {
      throw injdim::InputError("", std::string("malformed JSON: ") + e.what());
    }
    // Flags override the document.
    if (doc.is_object()) {
      if (bound) doc["bound"] = *bound;
      if (seed) doc["seed"] = *seed;
      if (format) doc["format"] = *format;
      if (jobs) doc["jobs"] = *jobs;
      if (count) doc["count"] = *count;
      if (zoo) doc["zoo"] = injdim::split_zoo_list(*zoo);
      if (timings) doc["timings"] = true;
    }
    job = injdim::parse_input(doc);
  } catch (const injdim::Error& e) {
    std::cerr << "input error " << e.what() << '\n';
    return 1;
  }

  try {
    injdim::JobResult r = injdim::run(job);
    std::cout << injdim::render(job, r);
    return r.exit_code;
  } catch (const injdim::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
