// Copyright 2026 The cluster-kit Authors
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


#ifndef CLUSTERKIT_PARALLEL_HPP_
#define CLUSTERKIT_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace clusterkit {

// Worker count for library-internal loops: CLUSTER_KIT_THREADS if set to a
// positive integer, otherwise the hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, count). Each index is visited exactly once; the
// caller must keep body free of shared writes other than to slot i. Small
// batches run inline.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace clusterkit

#endif  // CLUSTERKIT_PARALLEL_HPP_
