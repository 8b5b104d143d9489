from typing import Dict, List

from tqdm import tqdm


class BaseCallbackHandler:
    """Base callback handler to follow the stages of a point-counting run."""

    def on_model_built(self, model, **kwargs):
        """Run when the hyperelliptic model over O_K is available."""
        pass

    def on_classification_end(self, statuses: Dict[int, str], **kwargs):
        """Run when every odd prime below N has been classified; exceptional primes map to their status."""
        pass

    def on_forest_start(self, beta: int, **kwargs):
        """Run when the remainder forest of the translate h(x + beta) starts."""
        pass

    def on_forest_end(self, beta: int, **kwargs):
        """Run when the remainder forest of the translate h(x + beta) is done."""
        pass

    def on_prime_end(self, record, **kwargs):
        """Run when the record of one prime is final."""
        pass

    def on_run_end(self, records: List, **kwargs):
        """Run after the last record."""
        pass


class TqdmCallbackHandler(BaseCallbackHandler):
    """Progress bar over the per-prime stage."""

    def __init__(self, disable: bool = False):
        self.disable = disable
        self.bar = None

    def on_classification_end(self, statuses: Dict[int, str], **kwargs):
        self.bar = tqdm(total=kwargs.get("total", len(statuses)), unit="prime", disable=self.disable)

    def on_prime_end(self, record, **kwargs):
        if self.bar is not None:
            self.bar.update(1)
            self.bar.set_postfix(p=record.p, refresh=False)

    def on_run_end(self, records: List, **kwargs):
        if self.bar is not None:
            self.bar.close()
            self.bar = None
