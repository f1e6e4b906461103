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

#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcsim/common.hpp"

namespace qcsim {

/// A failed point-to-point operation. `rank` is the rank that observed the
/// failure, `peer` the other end (-1 when not tied to one).
class TransportError : public std::runtime_error {
   public:
    TransportError(int rank, int peer, const std::string &what);
    int rank() const noexcept {
        return rank_;
    }
    int peer() const noexcept {
        return peer_;
    }

   private:
    int rank_;
    int peer_;
};

using Payload = std::vector<Complex>;

/// Reliable point-to-point messaging between `size()` ranks. Messages from
/// one sender to one receiver arrive in send order. send() never blocks;
/// recv() blocks until a message from `from` is available.
class Transport {
   public:
    virtual ~Transport() = default;
    virtual int size() const = 0;
    virtual void send(int from, int to, Payload payload) = 0;
    virtual Payload recv(int to, int from) = 0;
    /// Wakes every blocked recv(), which then throws TransportError.
    virtual void abort(const std::string &reason) = 0;
};

/// Ranks as threads of one process; each receiver owns a mailbox per sender.
class InProcessTransport final : public Transport {
   public:
    explicit InProcessTransport(int ranks);

    int size() const override {
        return static_cast<int>(inboxes_.size());
    }
    void send(int from, int to, Payload payload) override;
    Payload recv(int to, int from) override;
    void abort(const std::string &reason) override;

    /// Payload bytes sent by `rank` so far (16 per amplitude).
    std::uint64_t bytes_sent(int rank) const;
    std::uint64_t total_bytes_sent() const;

   private:
    struct Inbox {
        std::mutex mutex;
        std::condition_variable ready;
        std::vector<std::deque<Payload>> from;  // one FIFO per sender
    };
    void check_rank(int rank, int peer, const char *what) const;

    std::vector<std::unique_ptr<Inbox>> inboxes_;
    std::vector<std::unique_ptr<std::atomic<std::uint64_t>>> sent_;
    std::atomic<bool> aborted_{false};
    std::string abort_reason_;
    std::mutex abort_mutex_;
};

/// Runs body(rank) for every rank on its own thread and waits for all of
/// them. If any rank throws, the transport is aborted so blocked peers
/// wake up, and the first root failure is rethrown as a TransportError
/// naming the rank.
void run_ranks(Transport &transport, const std::function<void(int)> &body);

}  // namespace qcsim
