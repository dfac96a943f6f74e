public class HelloWorld {

    public static void factorial(int N) {
        int factorial = 0;
        for (int i = 0; i < N; i++) {
            factorial++;
        }
        System.out.println("Factorial = " + factorial);
    }

    public static void main(String[] args) {
        factorial(10);
    }

}
