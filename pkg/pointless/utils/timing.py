import time
from contextlib import contextmanager
from typing import Dict, List


class EventLog:
    def __init__(self, event_name):
        self.event_name = event_name
        self.start_time = None
        self.end_time = None
        self.total_time = 0.0
        self.child_events = {}

    def record_start_time(self):
        self.start_time = time.perf_counter()
        self.end_time = None

    def record_end_time(self):
        self.end_time = time.perf_counter()
        # repeated events accumulate
        self.total_time += self.end_time - self.start_time

    def get_total_time(self):
        return self.total_time

    def get_child_events(self):
        return self.child_events


class StageTimer:
    """
    Nested wall-clock timing of named events.

    Example:
        timer = StageTimer()
        with timer.log_event("lift"):
            with timer.log_event("bsgs"):
                ...
        timer.dump()  # {"lift": 0.12, "lift/bsgs": 0.10}
    """

    def __init__(self):
        self.events: Dict[str, EventLog] = {}
        self.event_stack: List[EventLog] = []

    def _event_start(self, event_name: str) -> EventLog:
        siblings = self.event_stack[-1].get_child_events() if self.event_stack else self.events
        event = siblings.get(event_name)
        if event is None:
            event = EventLog(event_name=event_name)
            siblings[event_name] = event
        event.record_start_time()
        self.event_stack.append(event)
        return event

    def _event_end(self, event_name: str):
        if not self.event_stack or self.event_stack[-1].event_name != event_name:
            raise RuntimeError(f"Event {event_name} is not the innermost active event.")
        self.event_stack.pop().record_end_time()

    @contextmanager
    def log_event(self, event_name: str):
        self._event_start(event_name)
        try:
            yield
        finally:
            self._event_end(event_name)

    def dump(self) -> Dict[str, float]:
        """Total seconds per event, nested names joined with '/'."""
        out: Dict[str, float] = {}

        def walk(events: Dict[str, EventLog], prefix: str):
            for name, event in events.items():
                key = f"{prefix}{name}"
                out[key] = event.get_total_time()
                walk(event.get_child_events(), f"{key}/")

        walk(self.events, "")
        return out
