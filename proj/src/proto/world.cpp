// Copyright 2026 The qhelab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "proto/world.hpp"

#include <algorithm>
#include <stdexcept>

#include "core/errors.hpp"

namespace qhelab::proto {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}

std::vector<int> QuantumWorld::add_register(const core::StateVector& state,
                                            wire::Party owner) {
    Factor f;
    f.state = state;
    std::vector<int> handles;
    for (int q = 0; q < state.n_qubits(); ++q) {
        const int h = next_handle_++;
        f.handles.push_back(h);
        handles.push_back(h);
    }
    factors_.push_back(std::move(f));
    for (const int h : handles) {
        where_[h] = Location{static_cast<int>(factors_.size()) - 1, owner};
    }
    return handles;
}

int QuantumWorld::add_qubit(core::cplx c0, core::cplx c1, wire::Party owner) {
    return add_register(core::StateVector::qubit(c0, c1), owner)[0];
}

std::pair<int, int> QuantumWorld::add_epr(wire::Party a, wire::Party b) {
    const core::StateVector epr = core::StateVector::from_amplitudes(
        {core::cplx{kInvSqrt2, 0}, {}, {}, core::cplx{kInvSqrt2, 0}});
    const std::vector<int> hs = add_register(epr, a);
    where_[hs[1]].owner = b;
    return {hs[0], hs[1]};
}

int QuantumWorld::position_of(const Factor& f, int handle) const {
    const auto it = std::find(f.handles.begin(), f.handles.end(), handle);
    if (it == f.handles.end()) {
        throw internal_error("handle not in its recorded factor");
    }
    return static_cast<int>(it - f.handles.begin());
}

QuantumWorld::Factor& QuantumWorld::factor_of(int handle) {
    return factors_[where_.at(handle).factor];
}

const QuantumWorld::Factor& QuantumWorld::factor_of(int handle) const {
    return factors_[where_.at(handle).factor];
}

void QuantumWorld::check_owner(wire::Party actor, int handle) const {
    const auto it = where_.find(handle);
    if (it == where_.end()) {
        throw std::invalid_argument("unknown qubit handle");
    }
    if (it->second.owner != actor) {
        throw internal_error("party touched a qubit it does not own");
    }
}

void QuantumWorld::merge(int handle_a, int handle_b) {
    const int fa = where_.at(handle_a).factor;
    const int fb = where_.at(handle_b).factor;
    if (fa == fb) {
        return;
    }
    Factor& a = factors_[fa];
    Factor& b = factors_[fb];
    a.state.append(b.state);
    for (const int h : b.handles) {
        a.handles.push_back(h);
        where_[h].factor = fa;
    }
    b.handles.clear();
    b.state = core::StateVector();
}

void QuantumWorld::apply1(wire::Party actor, const core::Mat2& u, int handle) {
    check_owner(actor, handle);
    Factor& f = factor_of(handle);
    f.state.apply1(u, position_of(f, handle));
}

void QuantumWorld::apply2(wire::Party actor, const core::Mat4& u, int handle_hi,
                          int handle_lo) {
    check_owner(actor, handle_hi);
    check_owner(actor, handle_lo);
    merge(handle_hi, handle_lo);
    Factor& f = factor_of(handle_hi);
    f.state.apply2(u, position_of(f, handle_hi), position_of(f, handle_lo));
}

int QuantumWorld::measure_pauli(wire::Party actor, int handle, int axis) {
    check_owner(actor, handle);
    Factor& f = factor_of(handle);
    const int pos = position_of(f, handle);
    core::MeasureResult r = core::measure_pauli(f.state, pos, axis, rng_);
    f.state = std::move(r.post);
    f.handles.erase(f.handles.begin() + pos);
    where_.erase(handle);
    return r.outcome;
}

wire::Party QuantumWorld::owner(int handle) const { return where_.at(handle).owner; }

bool QuantumWorld::exists(int handle) const { return where_.contains(handle); }

int QuantumWorld::qubit_count() const { return static_cast<int>(where_.size()); }

std::vector<int> QuantumWorld::handles_of(wire::Party p) const {
    std::vector<int> out;
    for (const auto& [h, loc] : where_) {
        if (loc.owner == p) {
            out.push_back(h);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

core::Mat2 QuantumWorld::reduced_density(int handle) const {
    const Factor& f = factor_of(handle);
    return f.state.reduced_density(position_of(f, handle));
}

core::StateVector QuantumWorld::extract_state(std::span<const int> handles) const {
    // Gather the distinct factors in first-appearance order.
    std::vector<int> factor_order;
    for (const int h : handles) {
        const int fi = where_.at(h).factor;
        if (std::find(factor_order.begin(), factor_order.end(), fi) == factor_order.end()) {
            factor_order.push_back(fi);
        }
    }
    core::StateVector joint = core::StateVector::zero(0);
    std::vector<int> joint_handles;
    size_t covered = 0;
    for (const int fi : factor_order) {
        const Factor& f = factors_[fi];
        joint.append(f.state);
        joint_handles.insert(joint_handles.end(), f.handles.begin(), f.handles.end());
        covered += f.handles.size();
    }
    if (covered != handles.size()) {
        throw std::invalid_argument("requested qubits do not exhaust their factors");
    }
    std::vector<int> perm(handles.size());
    for (size_t i = 0; i < handles.size(); ++i) {
        const auto it = std::find(joint_handles.begin(), joint_handles.end(), handles[i]);
        if (it == joint_handles.end()) {
            throw std::invalid_argument("unknown handle in extraction");
        }
        perm[i] = static_cast<int>(it - joint_handles.begin());
    }
    return joint.permuted(perm);
}

}  // namespace qhelab::proto
