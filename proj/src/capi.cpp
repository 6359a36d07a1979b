#include "thompson/thompson.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <thread>

#include "thompson/conjugacy.hpp"
#include "thompson/delta.hpp"
#include "thompson/errors.hpp"
#include "thompson/oracle.hpp"
#include "thompson/roots.hpp"
#include "thompson/serialize.hpp"
#include "thompson/sigma.hpp"

struct tf_element {
  thompson::FElement value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tf_element* wrap(thompson::FElement f) { return new tf_element{std::move(f)}; }

template <typename Fn>
tf_status guarded(Fn fn) {
  g_last_error.clear();
  try {
    fn();
    return TF_OK;
  } catch (const thompson::UsageError& e) {
    g_last_error = e.what();
    return TF_ERR_USAGE;
  } catch (const thompson::ParseError& e) {
    g_last_error = e.what();
    return TF_ERR_PARSE;
  } catch (const thompson::DomainError& e) {
    g_last_error = e.what();
    return TF_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TF_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) throw thompson::UsageError(std::string(name) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* tf_last_error(void) { return g_last_error.c_str(); }

void tf_string_free(char* s) { std::free(s); }

tf_status tf_element_parse(const char* text, tf_element** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(thompson::parse_element(text));
  });
}

tf_status tf_element_identity(tf_element** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(thompson::FElement::identity());
  });
}

tf_status tf_element_clone(const tf_element* f, tf_element** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = wrap(f->value);
  });
}

void tf_element_free(tf_element* f) { delete f; }

tf_status tf_element_to_json(const tf_element* f, char** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = dup_string(thompson::to_json(f->value).dump());
  });
}

int tf_element_equal(const tf_element* f, const tf_element* g) {
  return f && g && f->value == g->value ? 1 : 0;
}

tf_status tf_compose(const tf_element* f, const tf_element* g, tf_element** out) {
  return guarded([&] {
    need(f, "f");
    need(g, "g");
    need(out, "out");
    *out = wrap(thompson::compose(f->value, g->value));
  });
}

tf_status tf_inverse(const tf_element* f, tf_element** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = wrap(thompson::inverse(f->value));
  });
}

tf_status tf_power(const tf_element* f, long n, tf_element** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = wrap(thompson::power(f->value, n));
  });
}

tf_status tf_evaluate(const tf_element* f, const char* x, char** out) {
  return guarded([&] {
    need(f, "f");
    need(x, "x");
    need(out, "out");
    *out = dup_string(f->value(thompson::Rational::parse(x)).to_string());
  });
}

tf_status tf_check(const char* text, int* in_f, char** out_json) {
  return guarded([&] {
    need(text, "text");
    need(in_f, "in_f");
    need(out_json, "out_json");
    const thompson::FCheck c = thompson::check_in_F(thompson::parse_map(text));
    *in_f = c.valid ? 1 : 0;
    *out_json = dup_string(thompson::to_json(c).dump());
  });
}

tf_status tf_sigma_json(const tf_element* f, char** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = dup_string(thompson::to_json(thompson::sigma_of(f->value)).dump());
  });
}

tf_status tf_delta_json(const tf_element* f, char** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = dup_string(thompson::to_json(thompson::delta_of(f->value)).dump());
  });
}

tf_status tf_fixed_structure_json(const tf_element* f, char** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    const thompson::FixedStructure fs = thompson::fixed_structure(f->value.map());
    thompson::Json intervals = thompson::Json::array();
    for (const auto& iv : fs.intervals) {
      intervals.push_back({{"lo", iv.lo.to_string()}, {"hi", iv.hi.to_string()}, {"sign", iv.sign}});
    }
    *out = dup_string(thompson::Json{{"intervals", std::move(intervals)}}.dump());
  });
}

tf_status tf_conjugate(const tf_element* f, const tf_element* g, int* conjugate, char** reason) {
  return guarded([&] {
    need(f, "f");
    need(g, "g");
    need(conjugate, "conjugate");
    need(reason, "reason");
    const thompson::Verdict v = thompson::conjugacy_verdict(f->value, g->value);
    *conjugate = v == thompson::Verdict::conjugate ? 1 : 0;
    *reason = *conjugate ? nullptr : dup_string(std::string(thompson::verdict_name(v)));
  });
}

tf_status tf_conjugator(const tf_element* f, const tf_element* g, tf_element** out) {
  return guarded([&] {
    need(f, "f");
    need(g, "g");
    need(out, "out");
    auto h = thompson::conjugator_witness(f->value, g->value);
    *out = h ? wrap(std::move(*h)) : nullptr;
  });
}

tf_status tf_root(const tf_element* f, long p, tf_element** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    auto r = thompson::root_extract(f->value, p);
    *out = r ? wrap(std::move(*r)) : nullptr;
  });
}

tf_status tf_root_generator(const tf_element* f, tf_element** generator, long* power) {
  return guarded([&] {
    need(f, "f");
    need(generator, "generator");
    need(power, "power");
    thompson::RootGenerator r = thompson::r_generator(f->value);
    *power = r.power;
    *generator = wrap(std::move(r.generator));
  });
}

tf_status tf_centralizer_json(const tf_element* f, char** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = dup_string(thompson::to_json(thompson::centralizer_structure(f->value)).dump());
  });
}

tf_status tf_random_element(uint64_t seed, int len, char** word, tf_element** out) {
  return guarded([&] {
    need(word, "word");
    need(out, "out");
    const auto w = thompson::oracle::random_word(seed, len);
    thompson::FElement e = thompson::word_to_element(w);
    *word = dup_string(thompson::format_word(w));
    *out = wrap(std::move(e));
  });
}

tf_status tf_oracle_conjugator(const tf_element* f, const tf_element* g, int max_len, tf_element** out) {
  return guarded([&] {
    need(f, "f");
    need(g, "g");
    need(out, "out");
    thompson::oracle::OracleConfig cfg = thompson::oracle::default_config();
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    auto h = thompson::oracle::brute_force_conjugator(f->value, g->value, max_len, cfg);
    *out = h ? wrap(std::move(*h)) : nullptr;
  });
}

}  // extern "C"
