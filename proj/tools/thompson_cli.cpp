// thompson: command-line front end over the C API. Prints one JSON document
// per invocation. Exit codes: 0 ok, 1 usage, 2 parse, 3 domain, 4 internal.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "thompson/thompson.h"

using Json = nlohmann::json;

namespace {

struct Failure {
  tf_status status;
  std::string message;
};

void ok(tf_status s) {
  if (s != TF_OK) throw Failure{s, tf_last_error()};
}

struct ElementDeleter {
  void operator()(tf_element* e) const { tf_element_free(e); }
};
using Element = std::unique_ptr<tf_element, ElementDeleter>;

struct StringDeleter {
  void operator()(char* s) const { tf_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

// An argument is a file path when such a file exists, otherwise the text itself.
std::string read_arg(const std::string& arg) {
  std::error_code ec;
  if (arg.rfind("word:", 0) != 0 && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

Element element(const std::string& arg) {
  tf_element* e = nullptr;
  ok(tf_element_parse(read_arg(arg).c_str(), &e));
  return Element(e);
}

Json take_json(char* raw) {
  CString s(raw);
  return Json::parse(s.get());
}

Json element_json(const tf_element* e) {
  if (!e) return nullptr;
  char* out = nullptr;
  ok(tf_element_to_json(e, &out));
  return take_json(out);
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Thompson's group F"};
  app.require_subcommand(1);
  bool json_flag = true;
  app.add_flag("--json", json_flag, "JSON output (the default and only format)");

  std::string a, b, x;
  std::vector<std::string> factors;
  long n = 0;
  std::uint64_t seed = 0;
  int len = 0;
  int max_len = 8;
  int exit_code = 0;

  auto* check = app.add_subcommand("check", "Diagnose membership of a PL map in F");
  check->add_option("element", a)->required();
  check->callback([&] {
    int in_f = 0;
    char* out = nullptr;
    ok(tf_check(read_arg(a).c_str(), &in_f, &out));
    print(take_json(out));
    exit_code = in_f ? 0 : TF_ERR_DOMAIN;
  });

  auto* eval = app.add_subcommand("eval", "Evaluate an element at a fraction");
  eval->add_option("element", a)->required();
  eval->add_option("x", x)->required();
  eval->callback([&] {
    Element f = element(a);
    char* out = nullptr;
    ok(tf_evaluate(f.get(), x.c_str(), &out));
    CString s(out);
    print({{"value", s.get()}});
  });

  auto* mul = app.add_subcommand("mul", "Composite A ∘ B ∘ ... (rightmost acts first)");
  mul->add_option("elements", factors)->required()->expected(1, -1);
  mul->callback([&] {
    Element acc = element(factors.back());
    for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) {
      Element f = element(*it);
      tf_element* out = nullptr;
      ok(tf_compose(f.get(), acc.get(), &out));
      acc.reset(out);
    }
    print(element_json(acc.get()));
  });

  auto* inv = app.add_subcommand("inv", "Inverse");
  inv->add_option("element", a)->required();
  inv->callback([&] {
    Element f = element(a);
    tf_element* out = nullptr;
    ok(tf_inverse(f.get(), &out));
    Element r(out);
    print(element_json(r.get()));
  });

  auto* pow = app.add_subcommand("pow", "Integer power");
  pow->add_option("element", a)->required();
  pow->add_option("n", n)->required();
  pow->callback([&] {
    Element f = element(a);
    tf_element* out = nullptr;
    ok(tf_power(f.get(), n, &out));
    Element r(out);
    print(element_json(r.get()));
  });

  auto* sigma = app.add_subcommand("sigma", "Σ invariant");
  sigma->add_option("element", a)->required();
  sigma->callback([&] {
    Element f = element(a);
    char* out = nullptr;
    ok(tf_sigma_json(f.get(), &out));
    print(take_json(out));
  });

  auto* delta = app.add_subcommand("delta", "Δ invariant");
  delta->add_option("element", a)->required();
  delta->callback([&] {
    Element f = element(a);
    char* out = nullptr;
    ok(tf_delta_json(f.get(), &out));
    print(take_json(out));
  });

  auto* conj = app.add_subcommand("conj", "Decide conjugacy in F");
  conj->add_option("A", a)->required();
  conj->add_option("B", b)->required();
  conj->callback([&] {
    Element f = element(a);
    Element g = element(b);
    int c = 0;
    char* reason = nullptr;
    ok(tf_conjugate(f.get(), g.get(), &c, &reason));
    CString r(reason);
    print({{"conjugate", c != 0}, {"reason", r ? Json(r.get()) : Json(nullptr)}});
  });

  auto* witness = app.add_subcommand("witness", "Conjugator h with h A h^-1 = B, or null");
  witness->add_option("A", a)->required();
  witness->add_option("B", b)->required();
  witness->callback([&] {
    Element f = element(a);
    Element g = element(b);
    tf_element* out = nullptr;
    ok(tf_conjugator(f.get(), g.get(), &out));
    Element h(out);
    print(element_json(h.get()));
  });

  auto* root = app.add_subcommand("root", "p-th root in F, or null");
  root->add_option("element", a)->required();
  root->add_option("p", n)->required();
  root->callback([&] {
    Element f = element(a);
    tf_element* out = nullptr;
    ok(tf_root(f.get(), n, &out));
    Element r(out);
    print(element_json(r.get()));
  });

  auto* rgen = app.add_subcommand("rgen", "Generator of the roots of an element");
  rgen->add_option("element", a)->required();
  rgen->callback([&] {
    Element f = element(a);
    tf_element* out = nullptr;
    long power = 0;
    ok(tf_root_generator(f.get(), &out, &power));
    Element g(out);
    print({{"generator", element_json(g.get())}, {"power", power}});
  });

  auto* cent = app.add_subcommand("centralizer", "Structure of the centralizer");
  cent->add_option("element", a)->required();
  cent->callback([&] {
    Element f = element(a);
    char* out = nullptr;
    ok(tf_centralizer_json(f.get(), &out));
    print(take_json(out));
  });

  auto* random = app.add_subcommand("random", "Random reduced word and its element");
  random->add_option("--seed", seed)->required();
  random->add_option("--len", len)->required()->check(CLI::NonNegativeNumber);
  random->callback([&] {
    char* word = nullptr;
    tf_element* out = nullptr;
    ok(tf_random_element(seed, len, &word, &out));
    CString w(word);
    Element e(out);
    Json j = element_json(e.get());
    j["word"] = w.get();
    print(j);
  });

  auto* oracle = app.add_subcommand("oracle-conj", "Brute-force conjugator search over short words");
  oracle->add_option("A", a)->required();
  oracle->add_option("B", b)->required();
  oracle->add_option("--max-len", max_len, "Word length bound")->capture_default_str();
  oracle->callback([&] {
    Element f = element(a);
    Element g = element(b);
    tf_element* out = nullptr;
    ok(tf_oracle_conjugator(f.get(), g.get(), max_len, &out));
    Element h(out);
    print({{"conjugator", element_json(h.get())}, {"max_len", max_len}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return TF_ERR_USAGE;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return TF_ERR_INTERNAL;
  }
  return exit_code;
}
