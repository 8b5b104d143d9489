import functools
import time
from abc import ABC, abstractmethod

from .utils import log


class Engine(ABC):
    """
    A staged pipeline whose run_* methods are timed.

    Subclasses call apply_decorators() at the end of __init__; afterwards the
    wall time of every run_* call is stored in self.time under the method name.
    """

    def __init__(self):
        self.time = {}
        self.counters = {}

    def log_execution_time(self, func):
        """Decorator to log the execution time of a function."""

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.time()
            result = func(*args, **kwargs)
            end_time = time.time()
            execution_time = end_time - start_time
            self.time[func.__name__] = execution_time
            log.info(f"{func.__name__} executed in {execution_time:.4f} seconds")
            return result

        return wrapper

    def apply_decorators(self):
        """Apply decorators to methods that need them."""
        methods_to_decorate = [
            method_name
            for method_name in dir(self)
            if callable(getattr(self, method_name)) and method_name.startswith("run_")
        ]
        for method_name in methods_to_decorate:
            original_method = getattr(self, method_name)
            decorated_method = self.log_execution_time(original_method)
            setattr(self, method_name, decorated_method)

    @abstractmethod
    def run_model_stage(self, **kwargs):
        pass

    @abstractmethod
    def run_classification_stage(self, **kwargs):
        pass

    @abstractmethod
    def run_forest_stage(self, **kwargs):
        pass

    @abstractmethod
    def run_prime_stage(self, **kwargs):
        pass

    @abstractmethod
    def run(self, **kwargs):
        pass

    def summary(self):
        log.color_print("***** Execution time *****")
        for k, v in self.time.items():
            log.color_print(f"{k}: {v:.4f} seconds")

        log.color_print("***** Counters *****")
        for k, v in self.counters.items():
            log.color_print(f"{k}: {v}")
