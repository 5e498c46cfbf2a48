#include "quotkit/ring.hpp"

namespace quotkit {

RingPtr Ring::make(std::vector<std::string> names, std::vector<VarRole> roles) {
  if (names.size() != roles.size()) throw std::logic_error("Ring::make: size mismatch");
  auto r = std::make_shared<Ring>();
  int fibers = 0;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == VarRole::Fiber) {
      if (static_cast<std::size_t>(fibers) != i)
        throw std::logic_error("Ring::make: fiber variables must precede base variables");
      ++fibers;
    }
  }
  r->names_ = std::move(names);
  r->roles_ = std::move(roles);
  r->fiber_count_ = fibers;
  return r;
}

RingPtr Ring::fiber(const std::string& prefix, int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names), std::vector<VarRole>(count, VarRole::Fiber));
}

RingPtr Ring::family(const std::string& fiber_prefix, int fiber_count,
                     const std::string& base_prefix, int base_count) {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  for (int i = 0; i < fiber_count; ++i) {
    names.push_back(fiber_prefix + std::to_string(i));
    roles.push_back(VarRole::Fiber);
  }
  for (int i = 0; i < base_count; ++i) {
    names.push_back(base_prefix + std::to_string(i + 1));
    roles.push_back(VarRole::Base);
  }
  return make(std::move(names), std::move(roles));
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int Ring::fiber_degree(const Expo& e) const {
  int d = 0;
  for (int i = 0; i < fiber_count_; ++i) d += e[i];
  return d;
}

int Ring::total_degree(const Expo& e) const {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

RingPtr Ring::base_subring() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!base_cache_) {
    std::vector<std::string> names(names_.begin() + fiber_count_, names_.end());
    base_cache_ = make(std::move(names), std::vector<VarRole>(base_count(), VarRole::Fiber));
  }
  return base_cache_;
}

RingPtr Ring::fiber_subring() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (!fiber_cache_) {
    std::vector<std::string> names(names_.begin(), names_.begin() + fiber_count_);
    fiber_cache_ = make(std::move(names), std::vector<VarRole>(fiber_count_, VarRole::Fiber));
  }
  return fiber_cache_;
}

RingPtr Ring::extended(const std::vector<std::string>& extra_names) const {
  std::vector<std::string> names;
  std::vector<VarRole> roles;
  for (int i = 0; i < fiber_count_; ++i) {
    names.push_back(names_[i]);
    roles.push_back(VarRole::Fiber);
  }
  for (const auto& n : extra_names) {
    names.push_back(n);
    roles.push_back(VarRole::Fiber);
  }
  for (int i = fiber_count_; i < size(); ++i) {
    names.push_back(names_[i]);
    roles.push_back(VarRole::Base);
  }
  return make(std::move(names), std::move(roles));
}

}  // namespace quotkit
