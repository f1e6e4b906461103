// Copyright 2026 The qcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcsim/transport.hpp"

#include <exception>
#include <thread>

namespace qcsim {

TransportError::TransportError(int rank, int peer, const std::string &what)
    : std::runtime_error("rank " + std::to_string(rank) + (peer >= 0 ? " (peer " + std::to_string(peer) + ")" : "") +
                         ": " + what),
      rank_(rank),
      peer_(peer) {
}

InProcessTransport::InProcessTransport(int ranks) {
    if (ranks < 1) {
        throw std::invalid_argument("transport needs at least one rank");
    }
    for (int r = 0; r < ranks; ++r) {
        auto inbox = std::make_unique<Inbox>();
        inbox->from.resize(static_cast<std::size_t>(ranks));
        inboxes_.push_back(std::move(inbox));
        sent_.push_back(std::make_unique<std::atomic<std::uint64_t>>(0));
    }
}

void InProcessTransport::check_rank(int rank, int peer, const char *what) const {
    if (rank < 0 || rank >= size() || peer < 0 || peer >= size()) {
        throw TransportError(rank, peer, std::string(what) + " with a rank outside 0.." + std::to_string(size() - 1));
    }
}

void InProcessTransport::send(int from, int to, Payload payload) {
    check_rank(from, to, "send");
    if (aborted_) {
        throw TransportError(from, to, "send after abort");
    }
    const std::uint64_t bytes = payload.size() * sizeof(Complex);
    Inbox &inbox = *inboxes_[static_cast<std::size_t>(to)];
    {
        std::lock_guard lock(inbox.mutex);
        inbox.from[static_cast<std::size_t>(from)].push_back(std::move(payload));
    }
    inbox.ready.notify_all();
    *sent_[static_cast<std::size_t>(from)] += bytes;
}

Payload InProcessTransport::recv(int to, int from) {
    check_rank(to, from, "recv");
    Inbox &inbox = *inboxes_[static_cast<std::size_t>(to)];
    auto &queue = inbox.from[static_cast<std::size_t>(from)];
    std::unique_lock lock(inbox.mutex);
    inbox.ready.wait(lock, [&] { return !queue.empty() || aborted_; });
    if (queue.empty()) {
        std::lock_guard guard(abort_mutex_);
        throw TransportError(to, from, "transport aborted: " + abort_reason_);
    }
    Payload payload = std::move(queue.front());
    queue.pop_front();
    return payload;
}

void InProcessTransport::abort(const std::string &reason) {
    {
        std::lock_guard guard(abort_mutex_);
        if (!aborted_) {
            abort_reason_ = reason;
        }
    }
    aborted_ = true;
    for (auto &inbox : inboxes_) {
        std::lock_guard lock(inbox->mutex);
        inbox->ready.notify_all();
    }
}

std::uint64_t InProcessTransport::bytes_sent(int rank) const {
    return *sent_.at(static_cast<std::size_t>(rank));
}

std::uint64_t InProcessTransport::total_bytes_sent() const {
    std::uint64_t total = 0;
    for (const auto &s : sent_) {
        total += *s;
    }
    return total;
}

void run_ranks(Transport &transport, const std::function<void(int)> &body) {
    const int ranks = transport.size();
    if (ranks == 1) {
        try {
            body(0);
        } catch (const TransportError &) {
            throw;
        } catch (const std::exception &e) {
            throw TransportError(0, -1, e.what());
        }
        return;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(ranks));
    std::mutex order_mutex;
    int first_failure = -1;
    {
        std::vector<std::jthread> workers;
        workers.reserve(static_cast<std::size_t>(ranks));
        for (int r = 0; r < ranks; ++r) {
            workers.emplace_back([&, r] {
                try {
                    body(r);
                } catch (...) {
                    errors[static_cast<std::size_t>(r)] = std::current_exception();
                    {
                        std::lock_guard lock(order_mutex);
                        if (first_failure < 0) {
                            first_failure = r;
                        }
                    }
                    transport.abort("rank " + std::to_string(r) + " failed");
                }
            });
        }
    }
    if (first_failure < 0) {
        return;
    }
    try {
        std::rethrow_exception(errors[static_cast<std::size_t>(first_failure)]);
    } catch (const TransportError &) {
        throw;
    } catch (const std::exception &e) {
        throw TransportError(first_failure, -1, e.what());
    }
}

}  // namespace qcsim
