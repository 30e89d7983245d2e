/*
 * Copyright (c) 2026, the cspauto authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cspauto/term.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "cspauto/error.hpp"

namespace cspauto {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_of(const std::string& s) { return std::hash<std::string>{}(s); }

std::size_t hash_of(const Value& v) {
  if (v.is_atom()) return mix(1, hash_of(v.atom_name()));
  return mix(2, std::hash<std::int32_t>{}(v.int_value()));
}

std::size_t hash_of(const Event& e) {
  std::size_t h = static_cast<std::size_t>(e.kind());
  if (e.is_visible()) {
    h = mix(h, hash_of(e.channel()));
    for (const Value& v : e.components()) h = mix(h, hash_of(v));
  }
  return h;
}

std::size_t hash_of(const EventSet& s) {
  std::size_t h = 0xE5;
  for (const Event& e : s) h = mix(h, hash_of(e));
  return h;
}

std::size_t hash_of(const ValueExpr& ve) {
  if (const Value* v = std::get_if<Value>(&ve)) return mix(3, hash_of(*v));
  return mix(4, hash_of(std::get<VarName>(ve).name));
}

std::size_t hash_of(const Binder& b) {
  std::size_t h = mix(5, hash_of(b.var));
  for (const Value& v : b.domain) h = mix(h, hash_of(v));
  return h;
}

std::size_t hash_of(const EventComp& c) {
  if (const ValueExpr* ve = std::get_if<ValueExpr>(&c)) return hash_of(*ve);
  return hash_of(std::get<Binder>(c));
}

std::size_t hash_of(TermRef t) { return std::hash<const void*>{}(t); }

std::size_t hash_payload(TermKind kind, const Term::Payload& data) {
  std::size_t h = static_cast<std::size_t>(kind) * 0x9E3779B1u;
  std::visit(
      [&h](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, PrefixData>) {
          h = mix(h, hash_of(d.channel));
          for (const ValueExpr& c : d.comps) h = mix(h, hash_of(c));
          h = mix(h, hash_of(d.cont));
        } else if constexpr (std::is_same_v<D, InputData>) {
          h = mix(h, hash_of(d.channel));
          for (const EventComp& c : d.comps) h = mix(h, hash_of(c));
          h = mix(h, hash_of(d.cont));
        } else if constexpr (std::is_same_v<D, PairData>) {
          h = mix(h, hash_of(d.left));
          h = mix(h, hash_of(d.right));
        } else if constexpr (std::is_same_v<D, GenParData>) {
          h = mix(h, hash_of(d.left));
          h = mix(h, hash_of(d.sync));
          h = mix(h, hash_of(d.right));
        } else if constexpr (std::is_same_v<D, AlphaParData>) {
          h = mix(h, hash_of(d.left));
          h = mix(h, hash_of(d.left_alpha));
          h = mix(h, hash_of(d.right_alpha));
          h = mix(h, hash_of(d.right));
        } else if constexpr (std::is_same_v<D, RefData>) {
          h = mix(h, hash_of(d.name));
        }
      },
      data);
  return h;
}

struct PoolHash {
  std::size_t operator()(const Term* t) const noexcept { return t->hash(); }
};

struct PoolEq {
  bool operator()(const Term* a, const Term* b) const noexcept {
    return a->shallow_equals(*b);
  }
};

}  // namespace

/// Process-wide intern pool. Nodes are never freed; pointer equality is
/// structural equality for the lifetime of the process.
class TermPool {
 public:
  static TermPool& instance() {
    static TermPool pool;
    return pool;
  }

  TermRef intern(TermKind kind, Term::Payload data) {
    auto candidate =
        std::unique_ptr<Term>(new Term(kind, std::move(data)));
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(candidate.get());
    if (it != index_.end()) return *it;
    TermRef result = candidate.get();
    owned_.push_back(std::move(candidate));
    index_.insert(result);
    return result;
  }

 private:
  std::mutex mu_;
  std::unordered_set<const Term*, PoolHash, PoolEq> index_;
  std::vector<std::unique_ptr<Term>> owned_;
};

namespace {

TermRef intern(TermKind kind, Term::Payload data) {
  return TermPool::instance().intern(kind, std::move(data));
}

void require_visible_set(const EventSet& s, const char* where) {
  for (const Event& e : s) {
    if (!e.is_visible())
      throw Error(ErrorCode::InvalidArgument,
                  std::string(where) + " sets may contain visible events only");
  }
}

void normalize_comp_domains(std::vector<EventComp>& comps) {
  for (EventComp& c : comps) {
    if (Binder* b = std::get_if<Binder>(&c)) {
      normalize_value_set(b->domain);
      if (b->domain.empty())
        throw Error(ErrorCode::InvalidArgument,
                    "binder domain for '" + b->var + "' is empty");
    }
  }
}

bool has_binder(const std::vector<EventComp>& comps) {
  for (const EventComp& c : comps)
    if (std::holds_alternative<Binder>(c)) return true;
  return false;
}

}  // namespace

Term::Term(TermKind kind, Payload data)
    : kind_(kind), data_(std::move(data)), hash_(hash_payload(kind_, data_)) {}

TermRef Term::stop() { return intern(TermKind::Stop, std::monostate{}); }

TermRef Term::skip() { return intern(TermKind::Skip, std::monostate{}); }

TermRef Term::prefix(const Event& event, TermRef cont) {
  if (!event.is_visible())
    throw Error(ErrorCode::InvalidArgument,
                "prefix events must be visible communications");
  std::vector<ValueExpr> comps;
  comps.reserve(event.components().size());
  for (const Value& v : event.components()) comps.emplace_back(v);
  return prefix(event.channel(), std::move(comps), cont);
}

TermRef Term::prefix(std::string channel, std::vector<ValueExpr> comps,
                     TermRef cont) {
  return intern(TermKind::Prefix,
                PrefixData{std::move(channel), std::move(comps), cont});
}

TermRef Term::input(std::string channel, std::vector<EventComp> comps,
                    TermRef cont) {
  if (!has_binder(comps))
    throw Error(ErrorCode::InvalidArgument,
                "input prefix on '" + channel + "' needs at least one binder");
  normalize_comp_domains(comps);
  return intern(TermKind::Input,
                InputData{std::move(channel), std::move(comps), cont});
}

TermRef Term::input(std::string channel, std::vector<Value> fixed,
                    std::vector<Binder> binders, TermRef cont) {
  std::vector<EventComp> comps;
  comps.reserve(fixed.size() + binders.size());
  for (Value& v : fixed) comps.emplace_back(ValueExpr(std::move(v)));
  for (Binder& b : binders) comps.emplace_back(std::move(b));
  return input(std::move(channel), std::move(comps), cont);
}

TermRef Term::ext_choice(TermRef left, TermRef right) {
  return intern(TermKind::ExtChoice, PairData{left, right});
}

TermRef Term::int_choice(TermRef left, TermRef right) {
  return intern(TermKind::IntChoice, PairData{left, right});
}

TermRef Term::sync_par(TermRef left, TermRef right) {
  return intern(TermKind::SyncPar, PairData{left, right});
}

TermRef Term::gen_par(TermRef left, EventSet sync, TermRef right) {
  require_visible_set(sync, "synchronization");
  return intern(TermKind::GenPar, GenParData{left, std::move(sync), right});
}

TermRef Term::alpha_par(TermRef left, EventSet left_alpha,
                        EventSet right_alpha, TermRef right) {
  require_visible_set(left_alpha, "alphabet");
  require_visible_set(right_alpha, "alphabet");
  return intern(TermKind::AlphaPar,
                AlphaParData{left, std::move(left_alpha),
                             std::move(right_alpha), right});
}

TermRef Term::interleave(TermRef left, TermRef right) {
  return intern(TermKind::Interleave, PairData{left, right});
}

TermRef Term::ref(std::string name) {
  return intern(TermKind::Ref, RefData{std::move(name)});
}

TermRef Term::ext_choice_all(std::span<const TermRef> branches) {
  if (branches.empty()) return stop();
  TermRef acc = branches.back();
  for (std::size_t i = branches.size() - 1; i-- > 0;)
    acc = ext_choice(branches[i], acc);
  return acc;
}

TermRef Term::int_choice_all(std::span<const TermRef> branches) {
  if (branches.empty()) return stop();
  TermRef acc = branches.back();
  for (std::size_t i = branches.size() - 1; i-- > 0;)
    acc = int_choice(branches[i], acc);
  return acc;
}

namespace {

std::strong_ordering order_value_expr(const ValueExpr& a, const ValueExpr& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (a.index() == 0) return std::get<Value>(a) <=> std::get<Value>(b);
  return std::get<VarName>(a) <=> std::get<VarName>(b);
}

std::strong_ordering order_comp(const EventComp& a, const EventComp& b) {
  if (a.index() != b.index()) return a.index() <=> b.index();
  if (a.index() == 0)
    return order_value_expr(std::get<ValueExpr>(a), std::get<ValueExpr>(b));
  return std::get<Binder>(a) <=> std::get<Binder>(b);
}

template <typename T, typename Cmp>
std::strong_ordering order_seq(const std::vector<T>& a, const std::vector<T>& b,
                               Cmp cmp) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering term_order(TermRef a, TermRef b) {
  if (a == b) return std::strong_ordering::equal;
  if (a->kind() != b->kind())
    return static_cast<int>(a->kind()) <=> static_cast<int>(b->kind());
  switch (a->kind()) {
    case TermKind::Stop:
    case TermKind::Skip:
      return std::strong_ordering::equal;
    case TermKind::Prefix: {
      const auto& x = a->as_prefix();
      const auto& y = b->as_prefix();
      if (auto c = x.channel <=> y.channel; c != 0) return c;
      if (auto c = order_seq(x.comps, y.comps, order_value_expr); c != 0)
        return c;
      return term_order(x.cont, y.cont);
    }
    case TermKind::Input: {
      const auto& x = a->as_input();
      const auto& y = b->as_input();
      if (auto c = x.channel <=> y.channel; c != 0) return c;
      if (auto c = order_seq(x.comps, y.comps, order_comp); c != 0) return c;
      return term_order(x.cont, y.cont);
    }
    case TermKind::ExtChoice:
    case TermKind::IntChoice:
    case TermKind::SyncPar:
    case TermKind::Interleave: {
      const auto& x = a->as_pair();
      const auto& y = b->as_pair();
      if (auto c = term_order(x.left, y.left); c != 0) return c;
      return term_order(x.right, y.right);
    }
    case TermKind::GenPar: {
      const auto& x = a->as_gen_par();
      const auto& y = b->as_gen_par();
      if (auto c = term_order(x.left, y.left); c != 0) return c;
      if (auto c = x.sync <=> y.sync; c != 0) return c;
      return term_order(x.right, y.right);
    }
    case TermKind::AlphaPar: {
      const auto& x = a->as_alpha_par();
      const auto& y = b->as_alpha_par();
      if (auto c = term_order(x.left, y.left); c != 0) return c;
      if (auto c = x.left_alpha <=> y.left_alpha; c != 0) return c;
      if (auto c = x.right_alpha <=> y.right_alpha; c != 0) return c;
      return term_order(x.right, y.right);
    }
    case TermKind::Ref:
      return a->as_ref().name <=> b->as_ref().name;
  }
  return std::strong_ordering::equal;  // unreachable
}

namespace {

ValueExpr substitute_expr(const ValueExpr& ve,
                          const std::map<std::string, Value>& binding) {
  if (const VarName* var = std::get_if<VarName>(&ve)) {
    auto it = binding.find(var->name);
    if (it != binding.end()) return ValueExpr(it->second);
  }
  return ve;
}

}  // namespace

TermRef substitute(TermRef t, const std::map<std::string, Value>& binding) {
  if (binding.empty()) return t;
  switch (t->kind()) {
    case TermKind::Stop:
    case TermKind::Skip:
    case TermKind::Ref:
      return t;
    case TermKind::Prefix: {
      const auto& d = t->as_prefix();
      std::vector<ValueExpr> comps;
      comps.reserve(d.comps.size());
      for (const ValueExpr& c : d.comps)
        comps.push_back(substitute_expr(c, binding));
      return Term::prefix(d.channel, std::move(comps),
                          substitute(d.cont, binding));
    }
    case TermKind::Input: {
      const auto& d = t->as_input();
      std::map<std::string, Value> scoped = binding;
      std::vector<EventComp> comps;
      comps.reserve(d.comps.size());
      for (const EventComp& c : d.comps) {
        if (const ValueExpr* ve = std::get_if<ValueExpr>(&c)) {
          comps.emplace_back(substitute_expr(*ve, scoped));
        } else {
          const Binder& b = std::get<Binder>(c);
          scoped.erase(b.var);  // inner binder shadows
          comps.emplace_back(b);
        }
      }
      return Term::input(d.channel, std::move(comps),
                         substitute(d.cont, scoped));
    }
    case TermKind::ExtChoice: {
      const auto& d = t->as_pair();
      return Term::ext_choice(substitute(d.left, binding),
                              substitute(d.right, binding));
    }
    case TermKind::IntChoice: {
      const auto& d = t->as_pair();
      return Term::int_choice(substitute(d.left, binding),
                              substitute(d.right, binding));
    }
    case TermKind::SyncPar: {
      const auto& d = t->as_pair();
      return Term::sync_par(substitute(d.left, binding),
                            substitute(d.right, binding));
    }
    case TermKind::Interleave: {
      const auto& d = t->as_pair();
      return Term::interleave(substitute(d.left, binding),
                              substitute(d.right, binding));
    }
    case TermKind::GenPar: {
      const auto& d = t->as_gen_par();
      return Term::gen_par(substitute(d.left, binding), d.sync,
                           substitute(d.right, binding));
    }
    case TermKind::AlphaPar: {
      const auto& d = t->as_alpha_par();
      return Term::alpha_par(substitute(d.left, binding), d.left_alpha,
                             d.right_alpha, substitute(d.right, binding));
    }
  }
  return t;  // unreachable
}

namespace {

void collect_free(TermRef t, std::set<std::string> bound,
                  std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Stop:
    case TermKind::Skip:
    case TermKind::Ref:
      return;
    case TermKind::Prefix: {
      const auto& d = t->as_prefix();
      for (const ValueExpr& c : d.comps)
        if (const VarName* v = std::get_if<VarName>(&c))
          if (!bound.count(v->name)) out.insert(v->name);
      collect_free(d.cont, std::move(bound), out);
      return;
    }
    case TermKind::Input: {
      const auto& d = t->as_input();
      for (const EventComp& c : d.comps) {
        if (const ValueExpr* ve = std::get_if<ValueExpr>(&c)) {
          if (const VarName* v = std::get_if<VarName>(ve))
            if (!bound.count(v->name)) out.insert(v->name);
        } else {
          bound.insert(std::get<Binder>(c).var);
        }
      }
      collect_free(d.cont, std::move(bound), out);
      return;
    }
    case TermKind::ExtChoice:
    case TermKind::IntChoice:
    case TermKind::SyncPar:
    case TermKind::Interleave: {
      const auto& d = t->as_pair();
      collect_free(d.left, bound, out);
      collect_free(d.right, std::move(bound), out);
      return;
    }
    case TermKind::GenPar: {
      const auto& d = t->as_gen_par();
      collect_free(d.left, bound, out);
      collect_free(d.right, std::move(bound), out);
      return;
    }
    case TermKind::AlphaPar: {
      const auto& d = t->as_alpha_par();
      collect_free(d.left, bound, out);
      collect_free(d.right, std::move(bound), out);
      return;
    }
  }
}

void collect_refs(TermRef t, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Stop:
    case TermKind::Skip:
      return;
    case TermKind::Ref:
      out.insert(t->as_ref().name);
      return;
    case TermKind::Prefix:
      collect_refs(t->as_prefix().cont, out);
      return;
    case TermKind::Input:
      collect_refs(t->as_input().cont, out);
      return;
    case TermKind::ExtChoice:
    case TermKind::IntChoice:
    case TermKind::SyncPar:
    case TermKind::Interleave:
      collect_refs(t->as_pair().left, out);
      collect_refs(t->as_pair().right, out);
      return;
    case TermKind::GenPar:
      collect_refs(t->as_gen_par().left, out);
      collect_refs(t->as_gen_par().right, out);
      return;
    case TermKind::AlphaPar:
      collect_refs(t->as_alpha_par().left, out);
      collect_refs(t->as_alpha_par().right, out);
      return;
  }
}

}  // namespace

std::set<std::string> free_variables(TermRef t) {
  std::set<std::string> out;
  collect_free(t, {}, out);
  return out;
}

std::set<std::string> referenced_names(TermRef t) {
  std::set<std::string> out;
  collect_refs(t, out);
  return out;
}

}  // namespace cspauto
