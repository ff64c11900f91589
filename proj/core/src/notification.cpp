#include "slider/notification.hpp"

#include <stdexcept>

namespace slider {

Severity severity_of(NotificationKind kind) {
  switch (kind) {
    case NotificationKind::ReadyToPlay:
    case NotificationKind::CorrectMove:
    case NotificationKind::GameComplete:
      return Severity::Success;
    case NotificationKind::Solving:
    case NotificationKind::WaitForSolver:
      return Severity::Warning;
    default:
      return Severity::Info;
  }
}

std::string_view to_string(NotificationKind kind) {
  switch (kind) {
    case NotificationKind::ReadyToPlay: return "ReadyToPlay";
    case NotificationKind::Solving: return "Solving";
    case NotificationKind::CorrectMove: return "CorrectMove";
    case NotificationKind::WrongMove: return "WrongMove";
    case NotificationKind::IllegalMove: return "IllegalMove";
    case NotificationKind::AlreadySolved: return "AlreadySolved";
    case NotificationKind::GameComplete: return "GameComplete";
    case NotificationKind::WaitForSolver: return "WaitForSolver";
    case NotificationKind::Quit: return "Quit";
  }
  return "?";
}

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Info: return "info";
    case Severity::Success: return "success";
    case Severity::Warning: return "warning";
  }
  return "?";
}

std::string_view default_text(NotificationKind kind) {
  switch (kind) {
    case NotificationKind::ReadyToPlay: return "Ready to play";
    case NotificationKind::Solving: return "Solving the board…";
    case NotificationKind::CorrectMove: return "Correct move";
    case NotificationKind::WrongMove: return "Wrong move, re-solving";
    case NotificationKind::IllegalMove: return "Can't move there";
    case NotificationKind::AlreadySolved: return "Puzzle already solved";
    case NotificationKind::GameComplete: return "You win!";
    case NotificationKind::WaitForSolver: return "Wait: solver is busy";
    case NotificationKind::Quit: return "Goodbye";
  }
  return "";
}

Notification make_notification(NotificationKind kind) {
  return Notification{kind, std::string(default_text(kind)), severity_of(kind)};
}

SendResult NotificationStream::send(Notification n) {
  {
    std::lock_guard lock(mu_);
    if (closed_) return SendResult::Closed;
    if (queue_.size() >= kCapacity) {
      throw std::logic_error("notification stream overflow");
    }
    queue_.push_back(std::move(n));
  }
  cv_.notify_one();
  return SendResult::Ack;
}

std::optional<Notification> NotificationStream::receive() {
  std::unique_lock lock(mu_);
  cv_.wait(lock, [this] { return !queue_.empty() || closed_; });
  if (queue_.empty()) return std::nullopt;
  Notification n = std::move(queue_.front());
  queue_.pop_front();
  return n;
}

std::optional<Notification> NotificationStream::try_receive() {
  std::lock_guard lock(mu_);
  if (queue_.empty()) return std::nullopt;
  Notification n = std::move(queue_.front());
  queue_.pop_front();
  return n;
}

void NotificationStream::close() {
  {
    std::lock_guard lock(mu_);
    closed_ = true;
  }
  cv_.notify_all();
}

bool NotificationStream::closed() const {
  std::lock_guard lock(mu_);
  return closed_;
}

void NotificationStream::receive_loop(
    const std::function<void(const Notification&)>& handler) {
  while (auto n = receive()) handler(*n);
}

}  // namespace slider
