import sys
import time

from .singleton import Singleton

__all__ = ['Logger']


# noinspection PyMissingConstructor
class Logger(Singleton):
    """ Console and run log shared by the whole process.

    Every line logged during a run is also kept in a buffer, the runner stores it as ``info.txt`` next to
    the artifacts of the scenario.

    Attributes
    ----------
    log_activate : bool, True by default
        Print messages on the console.

    tic : list[]
        Start times of the open measurements (nested measurements are allowed).

    buffer : str
        Text of the current run.
    """

    def __init__(self):
        self.log_activate = True
        self.tic = []
        self.buffer = ""

    def reset(self):
        """ Start a new run: empty buffer and no open measurements.
        """
        self.tic = []
        self.buffer = ""

    def log_enable(self):
        self.log_activate = True

    def log_disable(self):
        self.log_activate = False

    def _push(self, message, end='\n'):
        self.buffer += message + end

    def get_buffer(self):
        return self.buffer

    def save_buffer(self, filename):
        """ Write the buffer of the run.

        Parameters
        ----------
        filename : str
            Path of the log file, usually ``<out>/info.txt``.
        """
        with open(filename, 'w') as file_:
            file_.write(self.buffer)

    def log(self, message="", end='\n'):
        """ Print a line (if the console is active) and keep it in the buffer.

        Parameters
        ----------
        message : str
            Text of the line.

        end : str
            Terminator, a new line by default.
        """
        if self.log_activate:
            print(message, end=end)
        self._push(message, end=end)

    def write(self, message="", write_buf=False):
        """ Raw console output, used for progress lines that overwrite themselves.

        Parameters
        ----------
        message : str
            Text written as is.

        write_buf : bool
            Keep the text in the buffer too.
        """
        if self.log_activate:
            sys.stdout.write(message)
            sys.stdout.flush()
        if write_buf:
            self._push(message, end='')

    def start_measure_time(self, message=""):
        """ Open a time measurement and log its title (without new line). """
        self.tic.append(time.time())
        self.log(message=message, end="")

    def stop_measure_time(self, message=""):
        """ Close the last open measurement.

        Parameters
        ----------
        message : str
            Text logged before the elapsed time.

        Returns
        -------
        float
            Elapsed seconds since the matching :func:`start_measure_time`.
        """
        elapsed = time.time() - self.tic.pop()
        self.log(message=" %s - elapsed: %.2f [s]" % (message, elapsed))
        return elapsed

    def progressbar(self, it, prefix="", postfix="", end="", size=20):
        """ Iterate over ``it`` and draw a progress line on the console.

        Parameters
        ----------
        it : sized iterable
            Items to yield.

        prefix : str
            Text before the bar.

        postfix : str or callable
            Text after the bar; a callable is evaluated at every update (for example the current energy
            of a geodesic).

        end : str
            Text written when the iteration finishes.

        size : int
            Width of the bar in characters.
        """
        count = max(len(it), 1)
        tic = time.time()

        def _show(done):
            filled = int(size * done / count)
            dt = time.time() - tic
            left = (count - done) * dt / (done + 1)
            post = postfix() if callable(postfix) else postfix
            self.write("\r%s[%s%s] %i/%i elapsed: %.2f[s] - left: %.2f[s] %s" % (
                prefix, "#" * filled, "." * (size - filled), done, count, dt, left, post))

        _show(0)
        for i, item in enumerate(it):
            yield item
            _show(i + 1)
        self.write("%s\n" % end)
