import threading
from enum import Enum, unique, auto


@unique
class Log(Enum):
    FIT_ONE_PIECE = auto()
    FIT_FAILURE = auto()
    SPLIT = auto()
    MERGE = auto()
    BOOST_ACCEPT = auto()
    BOOST_REJECT = auto()
    SECURE_OP = auto()
    CANDIDATE = auto()


# Alex Martelli's 'Borg'
class Borg:
    _shared_state = {}

    def __init__(self):
        self.__dict__ = self._shared_state


# Run statistics shared across the process: counters, sets and plain values keyed by Log.
# Worker processes keep their own copy; only the parent's counts are reported.
class Logger(Borg):
    did_init = False

    def __init__(self):
        Borg.__init__(self)

        if not Logger.did_init:
            self.data = {}
            self._lock = threading.RLock()

        Logger.did_init = True

    def reset(self):
        with self._lock:
            self.data = {}

    def get(self, key, default=None):
        with self._lock:
            return self.data.get(key, default)

    def increment(self, key, amount=1):
        with self._lock:
            self.data[key] = self.data.get(key, 0) + amount

    def add(self, key, value):
        with self._lock:
            self.data.setdefault(key, set()).add(value)

    def set(self, key, value):
        with self._lock:
            self.data[key] = value

    def snapshot(self) -> dict:
        """Plain copy of the statistics keyed by name, with sets sorted, for reports and log lines."""
        with self._lock:
            return {_key_name(k): sorted(v) if isinstance(v, set) else v
                    for k, v in sorted(self.data.items(), key=lambda kv: _key_name(kv[0]))}


def _key_name(key):
    return key.name if isinstance(key, Log) else str(key)
