#ifndef SLIDER_NOTIFICATION_HPP
#define SLIDER_NOTIFICATION_HPP

#include <condition_variable>
#include <cstddef>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace slider {

enum class NotificationKind {
  ReadyToPlay,
  Solving,
  CorrectMove,
  WrongMove,
  IllegalMove,
  AlreadySolved,
  GameComplete,
  WaitForSolver,
  Quit,
};

enum class Severity { Info, Success, Warning };

struct Notification {
  NotificationKind kind;
  std::string text;
  Severity severity;

  friend bool operator==(const Notification&, const Notification&) = default;
};

Severity severity_of(NotificationKind kind);
std::string_view to_string(NotificationKind kind);
std::string_view to_string(Severity severity);

/// Default user-facing text for a kind.
std::string_view default_text(NotificationKind kind);

/// Notification with the default text and the fixed severity for `kind`.
Notification make_notification(NotificationKind kind);

enum class SendResult { Ack, Closed };

// Multiple-producer, single-consumer FIFO of notifications.
//
// Bounded at kCapacity queued messages; exceeding it is a logic error and
// throws std::logic_error. After close() every send returns Closed, and the
// consumer drains what is left before seeing end-of-stream.
class NotificationStream {
 public:
  static constexpr std::size_t kCapacity = 64;

  [[nodiscard]] SendResult send(Notification n);

  /// Blocks until a message is available or the stream is closed and empty.
  std::optional<Notification> receive();
  std::optional<Notification> try_receive();

  /// Idempotent.
  void close();
  bool closed() const;

  /// Calls `handler` once per message in order until end-of-stream.
  void receive_loop(const std::function<void(const Notification&)>& handler);

 private:
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::deque<Notification> queue_;
  bool closed_ = false;
};

}  // namespace slider

#endif  // SLIDER_NOTIFICATION_HPP
